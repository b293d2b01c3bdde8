//! Superpartitions `Λ = (Λ^a; Λ^s)` and their diagrams.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::partition::Partition;
use crate::{Error, Result};

/// A superpartition of degree `(n|m)`.
///
/// The fermionic parts are strictly decreasing (the last one may be zero), the
/// bosonic parts are weakly decreasing and positive.
///
/// `Ord` compares `(Λ*, Λ⊛)` lexicographically. This is a linear extension of
/// the dominance order; listings use the reverse (most dominant first).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SuperPartition {
    fermionic: Vec<usize>,
    bosonic: Vec<usize>,
    star: Partition,
    circledast: Partition,
}

/// One row of a diagram: `boxes` squares, optionally followed by a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiagramRow {
    pub boxes: usize,
    pub circle: bool,
}

/// The diagram of `Λ⊛` with the circled cells marked, rows top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    pub rows: Vec<DiagramRow>,
}

impl SuperPartition {
    pub fn new(fermionic: Vec<usize>, bosonic: Vec<usize>) -> Result<Self> {
        if fermionic.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::FermionicNotStrict(render(&fermionic, &bosonic)));
        }
        if bosonic.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BosonicNotDecreasing(render(&fermionic, &bosonic)));
        }
        if bosonic.contains(&0) {
            return Err(Error::ZeroBosonicPart(render(&fermionic, &bosonic)));
        }
        Ok(Self::from_sorted(fermionic, bosonic))
    }

    fn from_sorted(fermionic: Vec<usize>, bosonic: Vec<usize>) -> Self {
        let star = Partition::from_parts(fermionic.iter().chain(bosonic.iter()).copied().collect());
        let circledast = Partition::from_parts(fermionic.iter().map(|a| a + 1).chain(bosonic.iter().copied()).collect());
        SuperPartition { fermionic, bosonic, star, circledast }
    }

    /// Builds a superpartition from unsorted parts, sorting both lists.
    pub fn from_unsorted(mut fermionic: Vec<usize>, mut bosonic: Vec<usize>) -> Result<Self> {
        fermionic.sort_unstable_by(|a, b| b.cmp(a));
        bosonic.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(fermionic, bosonic)
    }

    /// An ordinary partition seen as a superpartition with `m = 0`.
    pub fn from_partition(p: &Partition) -> Self {
        Self::from_sorted(Vec::new(), p.parts().to_vec())
    }

    pub fn fermionic(&self) -> &[usize] {
        &self.fermionic
    }

    pub fn bosonic(&self) -> &[usize] {
        &self.bosonic
    }

    /// The fermionic degree `m`.
    pub fn m(&self) -> usize {
        self.fermionic.len()
    }

    /// The bosonic degree `n = |Λ|`.
    pub fn n(&self) -> usize {
        self.fermionic.iter().sum::<usize>() + self.bosonic.iter().sum::<usize>()
    }

    pub fn degree(&self) -> (usize, usize) {
        (self.n(), self.m())
    }

    /// Number of parts, counting a zero fermionic part.
    pub fn len(&self) -> usize {
        self.fermionic.len() + self.bosonic.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Parts in the order `Λ_1, …, Λ_ℓ` (fermionic first).
    pub fn parts(&self) -> impl Iterator<Item = usize> + '_ {
        self.fermionic.iter().chain(self.bosonic.iter()).copied()
    }

    /// `Λ*`: the diagram with circles removed.
    pub fn star(&self) -> &Partition {
        &self.star
    }

    /// `Λ⊛`: the diagram with circles turned into boxes.
    pub fn circledast(&self) -> &Partition {
        &self.circledast
    }

    pub fn diagram(&self) -> Diagram {
        let mut rows: Vec<DiagramRow> = self
            .fermionic
            .iter()
            .map(|&a| DiagramRow { boxes: a, circle: true })
            .chain(self.bosonic.iter().map(|&s| DiagramRow { boxes: s, circle: false }))
            .collect();
        rows.sort_by_key(|r| core::cmp::Reverse(2 * r.boxes + r.circle as usize));
        Diagram { rows }
    }

    /// Circle positions `(row, column)`, 1-based, top to bottom.
    ///
    /// The `k`-th entry belongs to the fermionic part `Λ_k` and sits in column `Λ_k + 1`.
    pub fn circle_positions(&self) -> Vec<(usize, usize)> {
        self.diagram().rows.iter().enumerate().filter(|(_, r)| r.circle).map(|(i, r)| (i + 1, r.boxes + 1)).collect()
    }

    pub fn conjugate(&self) -> SuperPartition {
        self.diagram().conjugate().to_superpartition()
    }

    /// Dominance: `self ≤ other` iff `self* ≤ other*` and `self⊛ ≤ other⊛`.
    pub fn dominated_by(&self, other: &SuperPartition) -> Result<bool> {
        if self.degree() != other.degree() {
            let (a, b) = self.degree();
            let (c, d) = other.degree();
            return Err(Error::DegreeMismatch(a, b, c, d));
        }
        Ok(self.star.dominated_by(&other.star) && self.circledast.dominated_by(&other.circledast))
    }

    /// The column counts `(c_{k,0}, c_{k,k-1})` for the `k`-th circle (1-based).
    ///
    /// `c_{k,0}` counts the bosonic columns strictly right of the circle `k`,
    /// `c_{k,k-1}` those strictly between circles `k` and `k-1`. For `k = 1`
    /// the second value equals the first.
    pub fn column_counts(&self, k: usize) -> Result<(usize, usize)> {
        let m = self.m();
        if k == 0 || k > m {
            return Err(Error::IndexOutOfRange { index: k, max: m });
        }
        let width = self.circledast.part(0);
        let fermionic_col = |c: usize| self.fermionic.iter().any(|&a| a + 1 == c);
        let ck = self.fermionic[k - 1] + 1;
        let bosonic_between = |lo: usize, hi: usize| (lo + 1..hi).filter(|&c| c <= width && !fermionic_col(c)).count();
        let ck0 = bosonic_between(ck, width + 1);
        let ckk1 = if k == 1 { ck0 } else { bosonic_between(ck, self.fermionic[k - 2] + 1) };
        Ok((ck0, ckk1))
    }

    /// All superpartitions of degree `(n|m)` in listing order (most dominant first).
    pub fn all(n: usize, m: usize) -> Vec<SuperPartition> {
        let mut out = Vec::new();
        let mut ferm = Vec::new();
        fn rec(n: usize, m: usize, below: Option<usize>, ferm: &mut Vec<usize>, out: &mut Vec<SuperPartition>) {
            if ferm.len() == m {
                let used: usize = ferm.iter().sum();
                for p in Partition::all(n - used) {
                    out.push(SuperPartition::from_sorted(ferm.clone(), p.parts().to_vec()));
                }
                return;
            }
            let used: usize = ferm.iter().sum();
            let left = m - ferm.len() - 1;
            // the remaining `left` parts below need at least 0+1+…+(left-1)
            let min_rest = left * left.saturating_sub(1) / 2;
            let hi = below.map_or(n, |b| b.saturating_sub(1).min(n));
            if below == Some(0) {
                return;
            }
            for a in left..=hi {
                if used + a + min_rest > n {
                    break;
                }
                ferm.push(a);
                rec(n, m, Some(a), ferm, out);
                ferm.pop();
            }
        }
        rec(n, m, None, &mut ferm, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Ord for SuperPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.star.cmp(&other.star).then_with(|| self.circledast.cmp(&other.circledast))
    }
}

impl PartialOrd for SuperPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Diagram {
    /// Transposes boxes and circles.
    pub fn conjugate(&self) -> Diagram {
        let width = self.rows.iter().map(|r| r.boxes + r.circle as usize).max().unwrap_or(0);
        let rows = (0..width)
            .map(|j| {
                let boxes = self.rows.iter().take_while(|r| r.boxes > j).count();
                let circle = self.rows.iter().any(|r| r.circle && r.boxes == j);
                DiagramRow { boxes, circle }
            })
            .filter(|r| r.boxes > 0 || r.circle)
            .collect();
        Diagram { rows }
    }

    pub fn to_superpartition(&self) -> SuperPartition {
        let mut ferm: Vec<usize> = self.rows.iter().filter(|r| r.circle).map(|r| r.boxes).collect();
        let mut bos: Vec<usize> = self.rows.iter().filter(|r| !r.circle && r.boxes > 0).map(|r| r.boxes).collect();
        ferm.sort_unstable_by(|a, b| b.cmp(a));
        bos.sort_unstable_by(|a, b| b.cmp(a));
        SuperPartition::from_sorted(ferm, bos)
    }
}

fn render(fermionic: &[usize], bosonic: &[usize]) -> String {
    let join = |v: &[usize]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
    alloc::format!("({};{})", join(fermionic), join(bosonic))
}

impl fmt::Display for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.fermionic, &self.bosonic))
    }
}

/// Parses `(a1,…,am;s1,…,sk)`. Whitespace is ignored and a part may be
/// written `p^r` for `r` copies of `p`.
impl FromStr for SuperPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::Malformed(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(malformed)?;
        let (a, b) = inner.split_once(';').ok_or_else(malformed)?;
        let list = |t: &str| -> Result<Vec<usize>> {
            let mut out = Vec::new();
            if t.is_empty() {
                return Ok(out);
            }
            for item in t.split(',') {
                let (base, reps) = match item.split_once('^') {
                    Some((p, r)) => (p, r.parse::<usize>().map_err(|_| malformed())?),
                    None => (item, 1),
                };
                let p = base.parse::<usize>().map_err(|_| malformed())?;
                out.extend(core::iter::repeat_n(p, reps));
            }
            Ok(out)
        };
        SuperPartition::new(list(a)?, list(b)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let l = sp("(3,1,0;2,1)");
        assert_eq!(l.fermionic(), &[3, 1, 0]);
        assert_eq!(l.bosonic(), &[2, 1]);
        assert_eq!(l.degree(), (7, 3));
        assert_eq!(l.to_string(), "(3,1,0;2,1)");
        assert_eq!(sp("(;)").to_string(), "(;)");
        assert_eq!(sp("(0;1^3)").to_string(), "(0;1,1,1)");
        assert_eq!(sp(" ( 3 ; ) ").to_string(), "(3;)");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("(1,3;2)".parse::<SuperPartition>(), Err(Error::FermionicNotStrict(_))));
        assert!(matches!("(1,1;2)".parse::<SuperPartition>(), Err(Error::FermionicNotStrict(_))));
        assert!(matches!("(3;0)".parse::<SuperPartition>(), Err(Error::ZeroBosonicPart(_))));
        assert!(matches!("(3;1,2)".parse::<SuperPartition>(), Err(Error::BosonicNotDecreasing(_))));
        for bad in ["3;1", "(3,1)", "(a;)", "(3;;1)", "(1,;)", ""] {
            assert!(matches!(bad.parse::<SuperPartition>(), Err(Error::Malformed(_))), "{bad}");
        }
    }

    #[test]
    fn star_and_circledast() {
        let l = sp("(3,1,0;2,1)");
        assert_eq!(l.star().parts(), &[3, 2, 1, 1]);
        assert_eq!(l.circledast().parts(), &[4, 2, 2, 1, 1]);
        let rows: Vec<(usize, bool)> = l.diagram().rows.iter().map(|r| (r.boxes, r.circle)).collect();
        assert_eq!(rows, vec![(3, true), (2, false), (1, true), (1, false), (0, true)]);
        assert_eq!(l.circle_positions(), vec![(1, 4), (3, 2), (5, 1)]);
    }

    #[test]
    fn conjugation() {
        assert_eq!(sp("(2,0;)").conjugate(), sp("(1,0;1)"));
        assert_eq!(sp("(1;)").conjugate(), sp("(0;1)"));
        assert_eq!(sp("(;3)").conjugate(), sp("(;1,1,1)"));
        for l in SuperPartition::all(5, 2) {
            assert_eq!(l.conjugate().conjugate(), l);
            assert_eq!(l.conjugate().degree(), l.degree());
        }
    }

    #[test]
    fn enumeration_counts() {
        // known counts of superpartitions of degree (n|m)
        let c = |n, m| SuperPartition::all(n, m).len();
        assert_eq!([c(0, 0), c(1, 0), c(2, 0), c(3, 0)], [1, 1, 2, 3]);
        assert_eq!([c(0, 1), c(1, 1), c(2, 1), c(3, 1), c(4, 1)], [1, 2, 4, 7, 12]);
        assert_eq!([c(1, 2), c(2, 2), c(3, 2), c(4, 2)], [1, 2, 5, 9]);
        assert_eq!(c(0, 2), 0);
        assert_eq!(c(3, 3), 1);
        let all = SuperPartition::all(4, 2);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        for l in &all {
            assert_eq!(l.degree(), (4, 2));
        }
    }

    #[test]
    fn dominance() {
        let a = sp("(2,0;1)");
        let b = sp("(3,0;)");
        assert!(a.dominated_by(&b).unwrap());
        assert!(!b.dominated_by(&a).unwrap());
        assert!(a.dominated_by(&a).unwrap());
        assert!(matches!(a.dominated_by(&sp("(3;)")), Err(Error::DegreeMismatch(..))));
        // descending listing order extends dominance
        for m in 0..3 {
            let all = SuperPartition::all(5, m);
            for (i, x) in all.iter().enumerate() {
                for y in &all[..i] {
                    assert!(!y.dominated_by(x).unwrap());
                }
            }
        }
    }

    #[test]
    fn column_counts() {
        let l = sp("(3,0;4,1)");
        assert_eq!(l.column_counts(1).unwrap(), (0, 0));
        assert_eq!(l.column_counts(2).unwrap(), (2, 2));
        assert_eq!(sp("(1;4)").column_counts(1).unwrap(), (2, 2));
        let l = sp("(2,1,0;4,4,4)");
        assert_eq!(l.column_counts(1).unwrap(), (1, 1));
        assert_eq!(l.column_counts(2).unwrap().1, 0);
        assert_eq!(l.column_counts(3).unwrap().1, 0);
        assert!(matches!(l.column_counts(4), Err(Error::IndexOutOfRange { .. })));
    }
}
