//! Combinatorics of two-letter weight words.
//!
//! Weights are finite words over {B, W}. Deleting one occurrence of a letter
//! in every possible way yields the deletion multisets S_B and S_W. For
//! length at least 3 the pair (S_B, S_W) determines the word; at length 2 the
//! single collision is {BW, WB}. The rigidity check verifies that a
//! length-preserving permutation commuting with both deletion maps and fixing
//! all words of length at most 2 is the identity. Each word also carries a
//! formal dimension (-1)^length, matching the generalized binomial C(-1, n).

use crate::exactnum::{binomial, rat};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    B,
    W,
}

impl Letter {
    pub fn flipped(self) -> Letter {
        match self {
            Letter::B => Letter::W,
            Letter::W => Letter::B,
        }
    }
}

/// A word over {B, W}; the empty word is the tensor unit label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(pub Vec<Letter>);

impl Weight {
    pub fn empty() -> Weight {
        Weight(vec![])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Letterwise swap of B and W.
    pub fn dual(&self) -> Weight {
        Weight(self.0.iter().map(|l| l.flipped()).collect())
    }

    pub fn reverse(&self) -> Weight {
        let mut v = self.0.clone();
        v.reverse();
        Weight(v)
    }

    /// reverse of the dual.
    pub fn pi_image(&self) -> Weight {
        self.dual().reverse()
    }

    /// Formal dimension (-1)^length.
    pub fn dimension(&self) -> i64 {
        if self.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn concat(&self, other: &Weight) -> Weight {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "e");
        }
        for l in &self.0 {
            write!(f, "{}", if *l == Letter::B { 'B' } else { 'W' })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid weight letter {0:?}; expected B, W, or the empty-word marker \"e\"")]
pub struct WeightParseError(char);

impl FromStr for Weight {
    type Err = WeightParseError;

    fn from_str(s: &str) -> Result<Weight, WeightParseError> {
        if s == "e" || s.is_empty() {
            return Ok(Weight::empty());
        }
        s.chars()
            .map(|c| match c {
                'B' => Ok(Letter::B),
                'W' => Ok(Letter::W),
                other => Err(WeightParseError(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Weight)
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Weight, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Multiset of weights, keyed canonically by the ordered map.
pub type WeightMultiset = BTreeMap<Weight, u64>;

fn delete_letter(lambda: &Weight, letter: Letter) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for (i, &l) in lambda.0.iter().enumerate() {
        if l == letter {
            let mut v = lambda.0.clone();
            v.remove(i);
            *out.entry(Weight(v)).or_insert(0) += 1;
        }
    }
    out
}

/// All words obtained by deleting one B, with multiplicity.
pub fn delete_black(lambda: &Weight) -> WeightMultiset {
    delete_letter(lambda, Letter::B)
}

/// All words obtained by deleting one W, with multiplicity.
pub fn delete_white(lambda: &Weight) -> WeightMultiset {
    delete_letter(lambda, Letter::W)
}

/// All 2^ell words of length ell, in lexicographic order (B < W).
pub fn all_weights(ell: usize) -> Vec<Weight> {
    let mut out = vec![Weight::empty()];
    for _ in 0..ell {
        out = out
            .into_iter()
            .flat_map(|w| {
                [Letter::B, Letter::W].into_iter().map(move |l| {
                    let mut v = w.0.clone();
                    v.push(l);
                    Weight(v)
                })
            })
            .collect();
    }
    out
}

/// All unordered pairs of distinct length-ell words with identical deletion
/// multiset pairs (S_B, S_W).
pub fn check_deletion_injectivity(ell: usize) -> Vec<(Weight, Weight)> {
    let mut by_key: BTreeMap<(WeightMultiset, WeightMultiset), Vec<Weight>> = BTreeMap::new();
    for w in all_weights(ell) {
        let key = (delete_black(&w), delete_white(&w));
        by_key.entry(key).or_default().push(w);
    }
    let mut out = vec![];
    for group in by_key.values() {
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                out.push((group[i].clone(), group[j].clone()));
            }
        }
    }
    out.sort();
    out
}

/// True iff the identity is the only length-preserving permutation of the
/// words of length <= ell_max that fixes every word of length <= 2 and
/// commutes with both deletion maps.
///
/// By induction such a permutation is the identity on lengths below ell, so
/// commuting with deletion forces S_B(sigma(w)) = S_B(w) and likewise for
/// S_W; the candidates for sigma(w) are exactly the deletion-collision class
/// of w, and rigidity holds iff every class at each length 3..=ell_max is a
/// singleton.
pub fn check_rigidity(ell_max: usize) -> bool {
    (3..=ell_max).all(|ell| check_deletion_injectivity(ell).is_empty())
}

/// Number of permutations of the length-ell words that fix all shorter words
/// and commute with both deletion maps: the product over deletion-collision
/// classes of the factorial of the class size.
pub fn count_level_symmetries(ell: usize) -> u64 {
    let mut by_key: BTreeMap<(WeightMultiset, WeightMultiset), u64> = BTreeMap::new();
    for w in all_weights(ell) {
        *by_key.entry((delete_black(&w), delete_white(&w))).or_insert(0) += 1;
    }
    by_key
        .values()
        .map(|&n| (1..=n).product::<u64>())
        .product()
}

/// Left-hand side of a product relation: either a formal product of simple
/// classes a_lambda, or a named object given only by its dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationLhs {
    Product(Vec<Weight>),
    Named { name: String, dimension: i64 },
}

/// One verified relation: lhs equals the sum of rhs terms with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub id: String,
    pub lhs: RelationLhs,
    pub rhs: Vec<(Weight, u64)>,
}

impl Relation {
    pub fn lhs_dimension(&self) -> i64 {
        match &self.lhs {
            RelationLhs::Product(ws) => ws.iter().map(|w| w.dimension()).product(),
            RelationLhs::Named { dimension, .. } => *dimension,
        }
    }

    pub fn rhs_dimension(&self) -> i64 {
        self.rhs
            .iter()
            .map(|(w, m)| *m as i64 * w.dimension())
            .sum()
    }

    pub fn dimensions_balance(&self) -> bool {
        self.lhs_dimension() == self.rhs_dimension()
    }
}

fn w(s: &str) -> Weight {
    s.parse().unwrap()
}

/// The product relations among length <= 2 classes, plus the decomposition
/// of the base object of the category, as structured data.
pub fn length2_relations() -> Vec<Relation> {
    vec![
        // a_B^2 = a_B + 2 a_BB
        Relation {
            id: "square-of-black".into(),
            lhs: RelationLhs::Product(vec![w("B"), w("B")]),
            rhs: vec![(w("B"), 1), (w("BB"), 2)],
        },
        // a_B a_W = a_BW + a_WB + a_B + a_W + 1
        Relation {
            id: "black-times-white".into(),
            lhs: RelationLhs::Product(vec![w("B"), w("W")]),
            rhs: vec![(w("BW"), 1), (w("WB"), 1), (w("B"), 1), (w("W"), 1), (w("e"), 1)],
        },
        // the base object decomposes as L_B + L_W + 1 and has dimension -1
        Relation {
            id: "base-object-decomposition".into(),
            lhs: RelationLhs::Named {
                name: "C(R)".into(),
                dimension: -1,
            },
            rhs: vec![(w("B"), 1), (w("W"), 1), (w("e"), 1)],
        },
    ]
}

/// True iff for every 0 <= n <= nmax the all-B word of length n has
/// dimension equal to the generalized binomial C(-1, n).
pub fn binomial_class_dimension_check(nmax: usize) -> bool {
    (0..=nmax).all(|n| {
        let word = Weight(vec![Letter::B; n]);
        rat(word.dimension()) == binomial(&rat(-1), n as u32)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn apply_multiset<F: Fn(&Weight) -> Weight>(ms: &WeightMultiset, f: F) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (k, &m) in ms {
            *out.entry(f(k)).or_insert(0) += m;
        }
        out
    }

    #[test]
    fn deletion_example_bbwb() {
        let ms = delete_black(&w("BBWB"));
        let mut expected = WeightMultiset::new();
        expected.insert(w("BWB"), 2);
        expected.insert(w("BBW"), 1);
        assert_eq!(ms, expected);
    }

    #[test]
    fn deletion_trivial_cases() {
        assert!(delete_black(&w("W")).is_empty());
        let mut expected = WeightMultiset::new();
        expected.insert(Weight::empty(), 1);
        assert_eq!(delete_black(&w("B")), expected);
        assert!(delete_black(&Weight::empty()).is_empty());
    }

    #[test]
    fn dual_reverse_pi() {
        assert_eq!(w("BBW").dual(), w("WWB"));
        assert_eq!(w("BW").pi_image(), w("BW"));
        assert_eq!(w("B").pi_image(), w("W"));
        assert_eq!(Weight::empty().reverse(), Weight::empty());
    }

    #[test]
    fn dimensions() {
        assert_eq!(Weight::empty().dimension(), 1);
        assert_eq!(w("B").dimension(), -1);
        assert_eq!(w("BBWB").dimension(), 1);
    }

    #[test]
    fn injectivity_small_lengths() {
        assert!(check_deletion_injectivity(1).is_empty());
        assert_eq!(check_deletion_injectivity(2), vec![(w("BW"), w("WB"))]);
        assert!(check_deletion_injectivity(3).is_empty());
        assert!(check_deletion_injectivity(4).is_empty());
    }

    #[test]
    fn injectivity_up_to_twelve() {
        for ell in 3..=12 {
            assert!(check_deletion_injectivity(ell).is_empty(), "length {ell}");
        }
    }

    #[test]
    fn rigidity_holds() {
        assert!(check_rigidity(3));
        assert!(check_rigidity(8));
    }

    // Independent oracle at length 3: walk all 8! bijections of the length-3
    // words and check the commutation constraints directly, with sigma fixed
    // to the identity on shorter words.
    #[test]
    fn rigidity_brute_force_length_3() {
        let words = all_weights(3);
        let n = words.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut valid = 0u64;
        loop {
            let ok = (0..n).all(|i| {
                let sigma_w = &words[perm[i]];
                delete_black(sigma_w) == delete_black(&words[i])
                    && delete_white(sigma_w) == delete_white(&words[i])
            });
            if ok {
                valid += 1;
                assert!(perm.iter().enumerate().all(|(i, &p)| i == p));
            }
            // next permutation in lexicographic order
            let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        assert_eq!(valid, 1);
        assert_eq!(count_level_symmetries(3), 1);
    }

    #[test]
    fn level_symmetry_counts() {
        // only the BW/WB swap survives at length 2
        assert_eq!(count_level_symmetries(2), 2);
        assert_eq!(count_level_symmetries(4), 1);
        assert_eq!(count_level_symmetries(5), 1);
    }

    #[test]
    fn reverse_is_counterexample_without_small_fixing() {
        // reverse commutes with both deletion maps yet is not the identity
        for ell in 0..=6 {
            for word in all_weights(ell) {
                assert_eq!(
                    delete_black(&word.reverse()),
                    apply_multiset(&delete_black(&word), |v| v.reverse())
                );
            }
        }
        assert_ne!(w("BW").reverse(), w("BW"));
    }

    #[test]
    fn relations_balance() {
        let rels = length2_relations();
        assert_eq!(rels.len(), 3);
        for r in &rels {
            assert!(r.dimensions_balance(), "{}", r.id);
        }
        assert_eq!(rels[0].lhs_dimension(), 1);
        assert_eq!(rels[2].lhs_dimension(), -1);
    }

    #[test]
    fn binomial_dimensions() {
        assert!(binomial_class_dimension_check(8));
        assert_eq!(binomial(&rat(-1), 4), rat(1));
        assert_eq!(binomial(&rat(-1), 0), rat(1));
    }

    #[test]
    fn weight_parse_round_trip() {
        assert_eq!(w("BBWB").to_string(), "BBWB");
        assert_eq!(Weight::empty().to_string(), "e");
        assert_eq!("e".parse::<Weight>().unwrap(), Weight::empty());
        assert!("BXW".parse::<Weight>().is_err());
        let json = serde_json::to_string(&w("BWB")).unwrap();
        assert_eq!(json, "\"BWB\"");
    }

    fn arb_weight(max_len: usize) -> impl Strategy<Value = Weight> {
        prop::collection::vec(prop_oneof![Just(Letter::B), Just(Letter::W)], 0..=max_len)
            .prop_map(Weight)
    }

    proptest! {
        #[test]
        fn deletion_count_matches_letter_count(word in arb_weight(10)) {
            let total: u64 = delete_black(&word).values().sum();
            prop_assert_eq!(total as usize, word.count(Letter::B));
        }

        #[test]
        fn dual_and_reverse_are_involutions(word in arb_weight(10)) {
            prop_assert_eq!(word.dual().dual(), word.clone());
            prop_assert_eq!(word.reverse().reverse(), word.clone());
            prop_assert_eq!(word.pi_image().pi_image(), word.clone());
        }

        #[test]
        fn deletion_commutes_with_dual(word in arb_weight(10)) {
            prop_assert_eq!(
                delete_black(&word.dual()),
                apply_multiset(&delete_white(&word), |v| v.dual())
            );
        }

        #[test]
        fn dimension_multiplicative(a in arb_weight(8), b in arb_weight(8)) {
            prop_assert_eq!(a.concat(&b).dimension(), a.dimension() * b.dimension());
        }
    }
}
