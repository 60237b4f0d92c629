use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use whittaker_core::alcove::{count_n, RootChain};
use whittaker_core::fillings::{fill_map, is_hhl};
use whittaker_core::weyl::{column_extended_length, column_inversions};
use whittaker_core::{LaurentPoly, Partition, Permutation, Transposition};

const RANK: usize = 2;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-5i64..=5, -2i32..=3, -2i32..=2, -2i32..=2), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .fold(LaurentPoly::zero(RANK), |acc, (c, t, a, b)| {
                &acc + &LaurentPoly::term(c, t, &[a, b])
            })
    })
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn rational() -> impl Strategy<Value = BigRational> {
    (1i64..=7, 1i64..=5, any::<bool>()).prop_map(|(p, q, neg)| {
        let r = BigRational::new(BigInt::from(p), BigInt::from(q));
        if neg {
            -r
        } else {
            r
        }
    })
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(RANK), a.clone());
    }

    #[test]
    fn terms_are_canonical(a in poly()) {
        let keys: Vec<_> = a.terms().map(|(k, _)| k.clone()).collect();
        prop_assert!(keys.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(a.terms().all(|(_, c)| *c != BigInt::from(0)));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), t in rational(), x in rational(), y in rational()) {
        let xs = [x, y];
        let ev = |p: &LaurentPoly| p.eval(&t, &xs).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    #[test]
    fn length_against_longest(w in perm(5)) {
        let w0 = Permutation::longest(5);
        prop_assert_eq!(w0.compose(&w).unwrap().length(), 10 - w.length());
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert_eq!(column_inversions(w.as_slice()).unwrap(), w.length());
    }

    #[test]
    fn bruhat_step_matches_length(w in perm(5), i in 1usize..5, d in 1usize..5) {
        let j = (i + d).min(5);
        prop_assume!(i < j);
        let t = Transposition::new(i, j).unwrap();
        let v = w.apply(t);
        prop_assert_eq!(w.bruhat_increases(t), v.length() > w.length());
        prop_assert_eq!(v.apply(t), w);
    }

    #[test]
    fn completed_length_parity(w in perm(5), drop in 1usize..=5) {
        let col: Vec<usize> = w.as_slice().iter().copied().filter(|&v| v != drop).collect();
        let full = column_extended_length(&col, 5).unwrap();
        prop_assert_eq!(full % 2, (column_inversions(&col).unwrap() + 5 - drop) % 2);
    }

    #[test]
    fn conjugate_is_an_involution(parts in prop::collection::vec(0usize..6, 0..5)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }
}

/// Walks the chain choosing folds at random among the admissible ones.
fn random_admissible(chain: &RootChain, rng: &mut ChaCha8Rng) -> (Permutation, Vec<usize>) {
    let n = chain.n();
    let u = Permutation::all(n).swap_remove(rng.gen_range(0..(1..=n).product::<usize>()));
    let mut w = u.clone();
    let mut k = Vec::new();
    for (idx, &t) in chain.entries().iter().enumerate() {
        if w.bruhat_increases(t) && rng.gen_bool(0.5) {
            w = w.apply(t);
            k.push(idx);
        }
    }
    (u, k)
}

#[test]
fn admissible_pairs_fill_hhl_and_track_length() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (lam, n) in [(vec![], 3), (vec![2, 1], 3), (vec![1], 4), (vec![3, 1], 4)] {
        let chain = RootChain::new(&Partition::new(lam).unwrap(), n).unwrap();
        for _ in 0..500 {
            let (u, k) = random_admissible(&chain, &mut rng);
            assert!(chain.is_admissible(&u, &k));
            assert!(is_hhl(&fill_map(&u, &k, &chain), n));
            let end = chain.end_of(&u, &k);
            let steps: Vec<Transposition> = k.iter().map(|&i| chain.entries()[i]).collect();
            assert_eq!(
                end.length(),
                u.length() + steps.len() + 2 * count_n(&u, &steps)
            );
        }
    }
}
