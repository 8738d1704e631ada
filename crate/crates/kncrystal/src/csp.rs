//! Orbit structure of the rotation action and the cyclic sieving
//! verdict.
//!
//! For a set of tableaux with n boxes on 2m letters the two arithmetic
//! hypotheses are that n is odd and that no odd prime p <= n divides m.
//! Under them every rotation orbit is free, and the fixed point counts of
//! the powers of the rotation match the hook content q-analogue evaluated
//! at the corresponding roots of unity. Everything here is checked
//! directly: the action is tabulated as a permutation, fixed points are
//! counted per element, the orbit census is recomputed from the cycles,
//! and the two are reconciled before any verdict is produced.
//!
//! On the weight side, gamma rotates coordinates, beta reverses all but
//! the first, and the block of a weight chi is
//! {gamma^t chi, -gamma^t beta chi : 0 <= t < m}. Under the hypotheses
//! the pwr statistic runs over a complete residue system mod 2m on each
//! block, which is the engine behind the free orbit statement.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::crystal::{orbit_census, sigma, OrbitCensus};
use crate::enumerate::TableauSet;
use crate::error::Error;
use crate::partition::Partition;
use crate::qpoly::formulas::{f_sp, pwr_wt, x_poly};
use crate::qpoly::intpoly::CyclotomicContext;
use crate::tableau::KNTableau;
use crate::weight::Weight;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Outcome of testing the two arithmetic hypotheses for a shape with n
/// boxes on 2m letters.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Hypotheses {
    pub n: usize,
    pub n_odd: bool,
    pub offending_prime: Option<usize>,
    pub hold: bool,
}

fn is_prime(k: usize) -> bool {
    if k < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= k {
        if k.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Tests both hypotheses, recording the smallest odd prime p <= n that
/// divides m when one exists.
pub fn hypotheses_hold(shape: &Partition, m: usize) -> Hypotheses {
    let n = shape.size();
    let n_odd = n % 2 == 1;
    let offending_prime = (3..=n)
        .step_by(2)
        .filter(|&p| is_prime(p))
        .find(|&p| m.is_multiple_of(p));
    Hypotheses {
        n,
        n_odd,
        hold: n_odd && offending_prime.is_none(),
        offending_prime,
    }
}

/// Rotates weight coordinates one step right.
pub fn gamma(chi: &Weight) -> Weight {
    let c = chi.coords();
    let m = c.len();
    let mut out = Vec::with_capacity(m);
    out.push(c[m - 1]);
    out.extend_from_slice(&c[..m - 1]);
    Weight::new(out)
}

/// Fixes the first coordinate and reverses the rest.
pub fn beta(chi: &Weight) -> Weight {
    let c = chi.coords();
    let mut out = Vec::with_capacity(c.len());
    out.push(c[0]);
    out.extend(c[1..].iter().rev());
    Weight::new(out)
}

/// The block of a weight, {gamma^t chi, -gamma^t beta chi : 0 <= t < m},
/// as a set.
pub fn a_chi(chi: &Weight) -> BTreeSet<Weight> {
    let mut out = BTreeSet::new();
    let mut plus = chi.clone();
    let mut minus = beta(chi);
    for _ in 0..chi.rank() {
        out.insert(plus.clone());
        out.insert(minus.negate());
        plus = gamma(&plus);
        minus = gamma(&minus);
    }
    out
}

/// The pwr values across one weight block and whether they run over a
/// complete residue system mod 2m.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueCheck {
    pub residues: Vec<i64>,
    pub complete: bool,
}

/// Evaluates pwr on gamma^t chi for 0 <= t < m, then on -gamma^t beta chi,
/// and reports whether the 2m values cover every class mod 2m.
pub fn check_residue_lemma(chi: &Weight, n: usize) -> Result<ResidueCheck, Error> {
    let m = chi.rank();
    let mut residues = Vec::with_capacity(2 * m);
    let mut plus = chi.clone();
    let mut minus = beta(chi);
    for _ in 0..m {
        residues.push(pwr_wt(&plus, n)?);
        plus = gamma(&plus);
    }
    for _ in 0..m {
        residues.push(pwr_wt(&minus.negate(), n)?);
        minus = gamma(&minus);
    }
    let modulus = 2 * m as i64;
    let classes: BTreeSet<i64> = residues.iter().map(|v| v.rem_euclid(modulus)).collect();
    Ok(ResidueCheck {
        complete: classes.len() == 2 * m,
        residues,
    })
}

/// Census of the rotation orbits on a full tableau set, together with the
/// hypotheses and whether every orbit has the full length 2m.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitTheoremCheck {
    pub hypotheses: Hypotheses,
    pub census: OrbitCensus,
    pub all_full: bool,
}

/// Walks every rotation orbit of the set and reports the census. The
/// free orbit statement predicts `all_full` exactly when the hypotheses
/// hold; the census is reported either way.
pub fn check_orbit_theorem(set: &TableauSet) -> Result<OrbitTheoremCheck, Error> {
    let hypotheses = hypotheses_hold(set.shape(), set.m());
    let census = orbit_census(set.members(), sigma, 2 * set.m())?;
    let all_full = census.sizes.keys().all(|&s| s == 2 * set.m());
    Ok(OrbitTheoremCheck {
        hypotheses,
        census,
        all_full,
    })
}

/// Tests whether the pwr generating polynomial is flat modulo q^2m - 1,
/// with every residue coefficient equal to |set| / 2m. Under the
/// hypotheses a cardinality not divisible by 2m is an internal error;
/// without them the flatness simply fails.
pub fn check_equiv_theorem(set: &TableauSet) -> Result<bool, Error> {
    let two_m = 2 * set.m();
    let residue = x_poly(set.members()).reduce_mod_cyclic(two_m);
    let quotient = set.len() / two_m;
    let remainder = set.len() % two_m;
    if remainder != 0 && hypotheses_hold(set.shape(), set.m()).hold {
        return Err(Error::Internal(format!(
            "{} members cannot split into free orbits of size {two_m}",
            set.len()
        )));
    }
    Ok(remainder == 0 && (0..two_m).all(|k| residue.coeff(k) == quotient.into()))
}

/// Tabulates an action on the set as a permutation of canonical indices.
pub fn action_permutation<F>(set: &TableauSet, action: F) -> Result<Vec<usize>, Error>
where
    F: Fn(&KNTableau) -> KNTableau + Sync,
{
    #[cfg(feature = "parallel")]
    {
        set.members()
            .par_iter()
            .map(|t| set.index_of(&action(t)).ok_or(Error::ActionLeftSet))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        action_permutation_sequential(set, action)
    }
}

/// Single-threaded form of [`action_permutation`], always available as a
/// reference implementation.
pub fn action_permutation_sequential<F>(set: &TableauSet, action: F) -> Result<Vec<usize>, Error>
where
    F: Fn(&KNTableau) -> KNTableau,
{
    set.members()
        .iter()
        .map(|t| set.index_of(&action(t)).ok_or(Error::ActionLeftSet))
        .collect()
}

/// Orbit census read off the cycles of a permutation.
pub fn permutation_census(perm: &[usize]) -> OrbitCensus {
    let mut visited = vec![false; perm.len()];
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for start in 0..perm.len() {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !visited[x] {
            visited[x] = true;
            x = perm[x];
            len += 1;
        }
        *sizes.entry(len).or_insert(0) += 1;
    }
    OrbitCensus { sizes }
}

fn is_fixed_by_power(perm: &[usize], start: usize, d: usize) -> bool {
    let mut x = start;
    for _ in 0..d {
        x = perm[x];
    }
    x == start
}

/// Fixed point counts of perm^d for d = 0..order, each element iterated
/// directly rather than read off the cycle structure.
pub fn fixed_point_counts(perm: &[usize], order: usize) -> Vec<usize> {
    #[cfg(feature = "parallel")]
    {
        (0..order)
            .map(|d| {
                (0..perm.len())
                    .into_par_iter()
                    .filter(|&start| is_fixed_by_power(perm, start, d))
                    .count()
            })
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        fixed_point_counts_sequential(perm, order)
    }
}

/// Single-threaded form of [`fixed_point_counts`], always available as a
/// reference implementation.
pub fn fixed_point_counts_sequential(perm: &[usize], order: usize) -> Vec<usize> {
    (0..order)
        .map(|d| {
            (0..perm.len())
                .filter(|&start| is_fixed_by_power(perm, start, d))
                .count()
        })
        .collect()
}

/// One evaluation row of a sieving report: the fixed point count of the
/// d-th power of the action next to the values of the hook content
/// q-analogue (`poly`) and of the full generating polynomial (`x`) at the
/// matching root of unity. A value that fails to be an integer is left
/// out and described in `note`, never rounded.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CspEvaluation {
    pub d: usize,
    pub fixed: usize,
    pub poly: Option<i64>,
    pub x: Option<i64>,
    pub note: Option<String>,
}

/// Full sieving report for one shape and alphabet.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CspReport {
    pub shape: Vec<usize>,
    pub m: usize,
    pub hypotheses: Hypotheses,
    pub census: BTreeMap<usize, usize>,
    pub evaluations: Vec<CspEvaluation>,
    pub verdict: bool,
}

/// Runs the whole sieving check for one action on one set: tabulate the
/// permutation, count fixed points of every power directly, reconcile the
/// counts with the cycle census, then compare count against the value of
/// the hook content q-analogue at each power of a primitive 2m-th root of
/// unity. The verdict is true exactly when all 2m comparisons agree.
///
/// The generating polynomial of pwr is required to equal q^kappa times
/// the analogue before anything is evaluated; its values are reported in
/// the `x` column of each row.
pub fn verify_csp<F>(set: &TableauSet, action: F) -> Result<CspReport, Error>
where
    F: Fn(&KNTableau) -> KNTableau + Sync,
{
    let m = set.m();
    assert!(m >= 1, "alphabet must be nonempty");
    let two_m = 2 * m;
    let perm = action_permutation(set, &action)?;
    let census = permutation_census(&perm);
    let fixed = fixed_point_counts(&perm, two_m);
    for (d, &observed) in fixed.iter().enumerate() {
        let derived: usize = census
            .sizes
            .iter()
            .filter(|&(&s, _)| d % s == 0)
            .map(|(&s, &c)| s * c)
            .sum();
        if derived != observed {
            return Err(Error::Internal(format!(
                "fixed point count at power {d} disagrees with the cycle census"
            )));
        }
    }
    let fsp = f_sp(set.shape(), m)?;
    let x = x_poly(set.members());
    if x != fsp.shifted(set.shape().kappa()) {
        return Err(Error::Internal(
            "generating polynomial differs from the shifted hook content analogue".into(),
        ));
    }
    let ctx = CyclotomicContext::new(two_m)?;
    let mut evaluations = Vec::with_capacity(two_m);
    let mut verdict = true;
    let push_note = |note: &mut Option<String>, text: String| {
        *note = Some(match note.take() {
            Some(prev) => format!("{prev}; {text}"),
            None => text,
        });
    };
    for (d, &count) in fixed.iter().enumerate() {
        let mut note: Option<String> = None;
        let poly = match ctx.eval_at_root(&fsp, d) {
            Ok(v) => {
                let val = v.to_i64();
                if val.is_none() {
                    push_note(&mut note, format!("value at step {d} overflows the report"));
                }
                val
            }
            Err(residue) => {
                push_note(
                    &mut note,
                    format!("value at step {d} is not an integer: residue {residue}"),
                );
                None
            }
        };
        let x_val = match ctx.eval_at_root(&x, d) {
            Ok(v) => v.to_i64(),
            Err(residue) => {
                push_note(
                    &mut note,
                    format!("shifted value at step {d} is not an integer: residue {residue}"),
                );
                None
            }
        };
        if poly != Some(count as i64) {
            verdict = false;
        }
        evaluations.push(CspEvaluation {
            d,
            fixed: count,
            poly,
            x: x_val,
            note,
        });
    }
    Ok(CspReport {
        shape: set.shape().parts().to_vec(),
        m,
        hypotheses: hypotheses_hold(set.shape(), m),
        census: census.sizes,
        evaluations,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_by_filter, DEFAULT_CAP};

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn weight(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec())
    }

    #[test]
    fn hypotheses_need_an_odd_box_count_and_a_clean_alphabet() {
        let good = hypotheses_hold(&shape(&[2, 1]), 2);
        assert!(good.hold && good.n_odd && good.offending_prime.is_none());
        let divisible = hypotheses_hold(&shape(&[2, 1]), 3);
        assert_eq!(divisible.offending_prime, Some(3));
        assert!(!divisible.hold);
        assert_eq!(hypotheses_hold(&shape(&[4, 1]), 6).offending_prime, Some(3));
        let even = hypotheses_hold(&shape(&[2, 2]), 2);
        assert!(!even.n_odd && !even.hold);
        assert!(hypotheses_hold(&shape(&[1]), 12).hold);
    }

    #[test]
    fn weight_block_of_a_generic_weight_has_two_m_elements() {
        let chi = weight(&[2, -1, 0, 0]);
        assert_eq!(gamma(&chi), weight(&[0, 2, -1, 0]));
        assert_eq!(beta(&chi), weight(&[2, 0, 0, -1]));
        let expected: BTreeSet<Weight> = [
            [2, -1, 0, 0],
            [0, 2, -1, 0],
            [0, 0, 2, -1],
            [-1, 0, 0, 2],
            [-2, 0, 0, 1],
            [1, -2, 0, 0],
            [0, 1, -2, 0],
            [0, 0, 1, -2],
        ]
        .iter()
        .map(|c| weight(c))
        .collect();
        assert_eq!(a_chi(&chi), expected);
        let zero = weight(&[0, 0]);
        assert_eq!(a_chi(&zero).len(), 1);
    }

    #[test]
    fn pwr_covers_all_classes_exactly_when_the_block_is_generic_enough() {
        let good = check_residue_lemma(&weight(&[2, -1, 0, 0]), 3).unwrap();
        assert!(good.complete);
        assert_eq!(good.residues[0], 6);
        let folded = check_residue_lemma(&weight(&[1, 1, 1]), 3).unwrap();
        assert!(!folded.complete);
        assert_eq!(folded.residues, vec![3, 3, 3, 12, 12, 12]);
    }

    #[test]
    fn rotation_orbits_are_free_exactly_under_the_hypotheses() {
        let free = enumerate_by_filter(&shape(&[2, 1]), 2, DEFAULT_CAP).unwrap();
        let check = check_orbit_theorem(&free).unwrap();
        assert!(check.all_full && check.hypotheses.hold);
        assert_eq!(check.census.sizes, BTreeMap::from([(4, 4)]));

        let folded = enumerate_by_filter(&shape(&[2, 1]), 3, DEFAULT_CAP).unwrap();
        let check = check_orbit_theorem(&folded).unwrap();
        assert!(!check.all_full && !check.hypotheses.hold);
        assert_eq!(check.census.sizes, BTreeMap::from([(2, 2), (6, 10)]));
    }

    #[test]
    fn flat_residue_of_the_generating_polynomial_tracks_the_hypotheses() {
        let free = enumerate_by_filter(&shape(&[2, 1]), 2, DEFAULT_CAP).unwrap();
        assert!(check_equiv_theorem(&free).unwrap());
        let folded = enumerate_by_filter(&shape(&[2, 1]), 3, DEFAULT_CAP).unwrap();
        assert!(!check_equiv_theorem(&folded).unwrap());
    }

    #[test]
    fn permutation_bookkeeping_matches_by_both_routes() {
        let perm = vec![1, 0, 3, 4, 2, 5];
        let census = permutation_census(&perm);
        assert_eq!(census.sizes, BTreeMap::from([(1, 1), (2, 1), (3, 1)]));
        assert_eq!(fixed_point_counts(&perm, 6), vec![6, 1, 3, 4, 3, 1]);
        assert_eq!(
            fixed_point_counts_sequential(&perm, 6),
            fixed_point_counts(&perm, 6)
        );
    }

    #[test]
    fn sieving_verdict_is_positive_on_the_smallest_free_case() {
        let set = enumerate_by_filter(&shape(&[2, 1]), 2, DEFAULT_CAP).unwrap();
        let report = verify_csp(&set, sigma).unwrap();
        assert!(report.verdict);
        assert_eq!(report.census, BTreeMap::from([(4, 4)]));
        let fixed: Vec<usize> = report.evaluations.iter().map(|e| e.fixed).collect();
        assert_eq!(fixed, vec![16, 0, 0, 0]);
        let poly: Vec<Option<i64>> = report.evaluations.iter().map(|e| e.poly).collect();
        assert_eq!(poly, vec![Some(16), Some(0), Some(0), Some(0)]);
        assert_eq!(report.evaluations[0].x, Some(16));
    }

    #[test]
    fn sieving_verdict_is_negative_when_the_alphabet_is_divisible() {
        let set = enumerate_by_filter(&shape(&[2, 1]), 3, DEFAULT_CAP).unwrap();
        let report = verify_csp(&set, sigma).unwrap();
        assert!(!report.verdict);
        assert!(!report.hypotheses.hold);
        assert_eq!(report.evaluations[0].fixed, 64);
        assert!(report
            .evaluations
            .iter()
            .any(|e| e.poly.is_none() && e.note.is_some()));
    }
}
