use super::LawError;
use crate::expr::{normalize_not, Expr};

/// Syntactic Boolean dual: AND and OR swap, constants flip, an IAND chain
/// becomes an OR with its inverted operands complemented, and an IMPLY chain
/// becomes an AND with its inverted operands complemented. Operands are
/// dualized recursively.
pub fn dual(e: &Expr) -> Expr {
    let out = normalize_not(&dual_raw(e));
    debug_assert!(
        {
            let vars = e.vars();
            match (crate::semantics::truth_table(e, Some(&vars)), crate::semantics::truth_table(&out, Some(&vars))) {
                (Ok(a), Ok(b)) => crate::semantics::classical_dual_tt(&a) == b,
                _ => true,
            }
        },
        "dual of {e} disagrees with the table-level dual"
    );
    out
}

fn dual_raw(e: &Expr) -> Expr {
    let kids = |cs: &[Expr]| cs.iter().map(dual_raw).collect::<Vec<_>>();
    match e {
        Expr::Const(b) => Expr::Const(!b),
        Expr::Var(_) => e.clone(),
        Expr::Not(c) => Expr::not(dual_raw(c)),
        Expr::And(cs) => Expr::Or(kids(cs)),
        Expr::Or(cs) => Expr::And(kids(cs)),
        Expr::Iand(cs) => {
            let mut out = kids(cs);
            for x in &mut out[1..] {
                *x = Expr::not(x.clone());
            }
            Expr::Or(out)
        }
        Expr::Imply(cs) => {
            let mut out = kids(cs);
            let last = out.len() - 1;
            for x in &mut out[..last] {
                *x = Expr::not(x.clone());
            }
            Expr::And(out)
        }
    }
}

/// Swap an IAND chain for the IMPLY chain over the same operands, or back.
pub fn demorgan_dual_expr(e: &Expr) -> Result<Expr, LawError> {
    match e {
        Expr::Iand(cs) => Ok(Expr::Imply(cs.clone())),
        Expr::Imply(cs) => Ok(Expr::Iand(cs.clone())),
        other => Err(LawError::Unsupported(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn e(s: &str) -> Expr {
        parse(s).unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&e("A @ B @ C")), e("A | !B | !C"));
        assert_eq!(dual(&e("A & 0")), e("A | 1"));
        assert_eq!(dual(&e("A -> B -> C")), e("!A & !B & C"));
        assert_eq!(dual(&e("!(A | B) @ !C")), e("!(A & B) | C"));
    }

    #[test]
    fn demorgan_dual_examples() {
        assert_eq!(demorgan_dual_expr(&e("A -> B")).unwrap(), e("A @ B"));
        assert_eq!(demorgan_dual_expr(&e("A @ B @ C")).unwrap(), e("A -> B -> C"));
        let x = e("(A | B) -> !C -> D");
        assert_eq!(demorgan_dual_expr(&demorgan_dual_expr(&x).unwrap()).unwrap(), x);
        assert!(matches!(demorgan_dual_expr(&e("A | B")), Err(LawError::Unsupported(_))));
    }
}
