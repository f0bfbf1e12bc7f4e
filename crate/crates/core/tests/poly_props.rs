use descartes_core::poly::{yun_squarefree, RatPoly};
use descartes_core::rational::{rat, Rational};
use num_traits::One;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(small_rat(), 0..=max_len).prop_map(RatPoly::new)
}

/// Products of linear factors with small roots and multiplicities, so
/// repeated roots actually show up.
fn factored() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec((-4i64..=4, 1i64..=3, 1usize..=3), 1..=4).prop_map(|fs| {
        fs.into_iter().fold(RatPoly::one(), |acc, (n, d, m)| {
            &acc * &RatPoly::linear_root(&rat(n, d)).pow(m)
        })
    })
}

proptest! {
    #[test]
    fn mul_commutes(p in poly(6), q in poly(6)) {
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn mul_associates(p in poly(4), q in poly(4), r in poly(4)) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn mul_distributes(p in poly(4), q in poly(4), r in poly(4)) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn eval_is_a_ring_map(p in poly(5), q in poly(5), x in small_rat()) {
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
    }

    #[test]
    fn scaled_substitution_composes(p in poly(6), a in 1i64..=9, b in 1i64..=9) {
        prop_assume!(!p.is_zero());
        let (ea, eb) = (rat(1, a), rat(b, 7));
        let twice = p.substitute_scaled(&ea).unwrap().substitute_scaled(&eb).unwrap();
        prop_assert_eq!(twice, p.substitute_scaled(&(&ea * &eb)).unwrap());
    }

    #[test]
    fn scaled_substitution_keeps_values(p in poly(6), x in small_rat(), a in 1i64..=9) {
        prop_assume!(!p.is_zero());
        // eps^d p(x / eps) evaluated at eps * x equals eps^d p(x)
        let d = p.degree().unwrap();
        let eps = rat(1, a);
        let s = p.substitute_scaled(&eps).unwrap();
        let scale = (0..d).fold(Rational::one(), |acc, _| acc * &eps);
        prop_assert_eq!(s.eval(&(&eps * &x)), scale * p.eval(&x));
    }

    #[test]
    fn leibniz_rule(p in poly(5), q in poly(5)) {
        let lhs = (&p * &q).derivative(1);
        let rhs = &(&p.derivative(1) * &q) + &(&p * &q.derivative(1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_identity(p in poly(7), q in poly(4)) {
        prop_assume!(!q.is_zero());
        let (quot, rem) = p.div_rem(&q);
        prop_assert_eq!(&(&quot * &q) + &rem, p);
        prop_assert!(rem.is_zero() || rem.degree() < q.degree());
    }

    #[test]
    fn yun_reconstructs(p in factored(), c in 1i64..=5) {
        let p = p.scale(&rat(c, 2));
        let parts = yun_squarefree(&p).unwrap();
        let rebuilt = parts.iter().fold(RatPoly::one(), |acc, (f, m)| &acc * &f.pow(*m));
        prop_assert_eq!(rebuilt.scale(p.leading().unwrap()), p.clone());
        for (i, (f, _)) in parts.iter().enumerate() {
            prop_assert!(f.is_monic());
            prop_assert_eq!(f.gcd(&f.derivative(1)), RatPoly::one());
            for (g, _) in &parts[i + 1..] {
                prop_assert_eq!(f.gcd(g), RatPoly::one());
            }
        }
        let mults: Vec<usize> = parts.iter().map(|(_, m)| *m).collect();
        let mut sorted = mults.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(mults, sorted);
    }

    #[test]
    fn gcd_divides_both(p in factored(), q in factored()) {
        let g = p.gcd(&q);
        prop_assert!(p.div_rem(&g).1.is_zero());
        prop_assert!(q.div_rem(&g).1.is_zero());
    }
}
