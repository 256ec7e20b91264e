use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;

use quandle::chains::{boundary, FormalChain};
use quandle::constructions::{alexander_zn, canonical_form, dihedral, is_isomorphic};
use quandle::homology::cocycle::{cocycle_space, coboundary, CocycleTable};
use quandle::homology::matrix::IntegerMatrix;
use quandle::homology::{hermite_normal_form, smith_normal_form};
use quandle::shell::{emit, load_str, Convention};
use quandle::{Mode, QuandleTable, Word};

fn gcd(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

/// Alexander quandles on `Z_n` with `t` a unit.
fn alexander() -> impl Strategy<Value = QuandleTable> {
    (2usize..12)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_filter("t must be a unit", |&(n, t)| gcd(n, t) == 1)
        .prop_map(|(n, t)| alexander_zn(n, t).unwrap())
}

fn chain(order: usize, degree: usize) -> impl Strategy<Value = FormalChain> {
    prop::collection::vec((prop::collection::vec(0..order as u32, degree), -3i64..=3), 0..12)
        .prop_map(move |terms| FormalChain::from_terms(degree, terms))
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

proptest! {
    #[test]
    fn alexander_tables_are_quandles(q in alexander()) {
        prop_assert!(q.is_quandle());
        let rows: Vec<Vec<i64>> = q.rows().iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
        prop_assert!(QuandleTable::from_rows(&rows, Mode::Quandle).is_ok());
    }

    #[test]
    fn boundary_squares_to_zero(
        (q, c) in (alexander(), 2usize..5)
            .prop_flat_map(|(q, degree)| { let n = q.order(); (Just(q), chain(n, degree)) })
    ) {
        prop_assert!(boundary(&q, &boundary(&q, &c)).is_zero());
    }

    #[test]
    fn smith_form_invariants(rows in matrix()) {
        let m = IntegerMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        let (u, v) = (s.left.clone().unwrap(), s.right.clone().unwrap());
        prop_assert_eq!(u.mul(&m).mul(&v), s.diagonal_matrix(m.rows(), m.cols()));
        prop_assert_eq!(u.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(v.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(s.rank(), m.rational_rank());
        let f = s.invariant_factors();
        prop_assert!(f.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        if m.rows() == m.cols() {
            let prod: BigInt = s.diagonal.iter().product();
            prop_assert_eq!(prod.abs(), m.determinant().abs());
        }
    }

    #[test]
    fn hermite_form_is_row_equivalent(rows in matrix()) {
        let m = IntegerMatrix::from_rows(&rows);
        let h = hermite_normal_form(&m);
        prop_assert_eq!(h.u.mul(&m), h.h.clone());
        prop_assert_eq!(h.u.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(h.rank(), m.rational_rank());
    }

    #[test]
    fn relabelling_preserves_canonical_form(
        (n, p) in (3usize..7).prop_flat_map(|n| (Just(n), Just((0..n).collect::<Vec<usize>>()).prop_shuffle()))
    ) {
        let q = dihedral(n).unwrap();
        let r = q.relabel(&p);
        prop_assert_eq!(canonical_form(&q), canonical_form(&r));
        prop_assert!(is_isomorphic(&q, &r));
        prop_assert_eq!(q.type_of(), r.type_of());
    }

    #[test]
    fn words_round_trip(letters in prop::collection::vec(0usize..4, 1..9)) {
        // first-occurrence renumbering gives a canonical word
        let mut seen = Vec::new();
        let canon: Vec<usize> = letters.iter().map(|l| match seen.iter().position(|s| s == l) {
            Some(i) => i,
            None => { seen.push(*l); seen.len() - 1 }
        }).collect();
        let w = Word::new(&canon).unwrap();
        prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w.clone());
        prop_assert_eq!(w.alphabet_size(), seen.len());
    }

    #[test]
    fn matrix_files_round_trip(q in alexander(), left in any::<bool>()) {
        let conv = if left { Convention::Left } else { Convention::Right };
        let text = emit(&q, conv);
        let back = load_str(&text, conv, std::path::Path::new("mem")).unwrap();
        prop_assert_eq!(back.len(), 1);
        prop_assert_eq!(back[0].rows(), q.rows());
    }

    #[test]
    fn cocycle_spaces_are_closed(q in alexander().prop_filter("small", |q| q.order() <= 7), d in 2u64..6) {
        let space = cocycle_space(&q, d, Mode::Quandle).unwrap();
        let mut sum = CocycleTable::zero(q.order(), d, Mode::Quandle);
        for (g, &k) in space.generators.iter().zip(&space.orders) {
            prop_assert!(g.check(&q));
            prop_assert!(g.scale(k as i64).is_zero());
            sum = sum.add(g);
        }
        prop_assert!(sum.check(&q));
        // coboundaries of 1-cochains are cocycles
        let f: Vec<i64> = (0..q.order() as i64).map(|i| i * i % d as i64).collect();
        prop_assert!(coboundary(&q, &f, d).check(&q));
    }
}
