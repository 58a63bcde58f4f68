//! Semistandard tableaux and monomial expansions of Schur and inflated
//! Grothendieck polynomials.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::{orbit, Point};
use crate::partitions::{dominating_sequence, partitions_between, Partition};
use crate::permutohedron::dominated_partitions;

/// A filling of a Young diagram with entries in `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Rows weakly increase, columns strictly increase, entries are in
    /// `1..=max_entry`, and row lengths match the shape.
    pub fn is_semistandard(&self, max_entry: u32) -> bool {
        let shape = self.shape.parts();
        if self.rows.len() != shape.len() {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != shape[r] as usize {
                return false;
            }
            if row.iter().any(|&x| x == 0 || x > max_entry) || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r > 0 && row.iter().zip(&self.rows[r - 1]).any(|(below, above)| below <= above) {
                return false;
            }
        }
        true
    }

    /// `(d_1, …, d_m)`: how many times each letter occurs.
    pub fn content(&self, m: usize) -> Vec<u32> {
        let mut c = vec![0u32; m];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        c
    }

    /// Entries row by row, top to bottom.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// The tableau made of columns `j` with `j ≡ i (mod t)` (0-based `j`).
    pub fn column_class(&self, i: usize, t: usize) -> Tableau {
        let rows: Vec<Vec<u32>> =
            self.rows.iter().map(|row| row.iter().enumerate().filter(|(j, _)| j % t == i).map(|(_, &x)| x).collect()).collect();
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect()).expect("column classes keep the shape decreasing");
        Tableau { shape, rows }
    }
}

/// All semistandard tableaux of the given shape with entries in
/// `1..=max_entry`, in lexicographic order of reading words.
pub fn enumerate_ssyt(shape: &Partition, max_entry: u32) -> Vec<Tableau> {
    let lens: Vec<usize> = shape.parts().iter().map(|&x| x as usize).collect();
    let mut rows: Vec<Vec<u32>> = lens.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    fn rec(r: usize, lens: &[usize], max: u32, rows: &mut Vec<Vec<u32>>, shape: &Partition, out: &mut Vec<Tableau>) {
        if r == lens.len() {
            out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        let c = rows[r].len();
        if c == lens[r] {
            rec(r + 1, lens, max, rows, shape, out);
            return;
        }
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        // the column below needs lens.. rows of room
        let depth = lens[r..].iter().take_while(|&&l| l > c).count() as u32;
        let lo = left.max(above);
        if max + 1 < depth {
            return;
        }
        for v in lo..=max + 1 - depth {
            rows[r].push(v);
            rec(r, lens, max, rows, shape, out);
            rows[r].pop();
        }
    }
    rec(0, &lens, max_entry, &mut rows, shape, &mut out);
    out
}

/// A polynomial in `m` variables with integer coefficients, keyed by
/// exponent vector. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MonomialMap {
    m: usize,
    terms: BTreeMap<Point, BigInt>,
}

impl MonomialMap {
    pub fn new(m: usize) -> Self {
        Self { m, terms: BTreeMap::new() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn add_term(&mut self, exponent: Point, coeff: BigInt) {
        assert_eq!(exponent.len(), self.m, "exponent length must be m");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, other: &MonomialMap, scale: &BigInt) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * scale);
        }
    }

    pub fn coeff(&self, exponent: &[u32]) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Point, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exponent vectors with nonzero coefficient, sorted.
    pub fn support(&self) -> Vec<Point> {
        self.terms.keys().cloned().collect()
    }

    pub fn remove(&mut self, exponent: &[u32]) -> Option<BigInt> {
        self.terms.remove(exponent)
    }

    /// Invariant under every permutation of the variables.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| orbit(e).all(|q| self.terms.get(&q) == Some(c)))
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    exponent: Point,
    coeff: String,
}

impl Serialize for MonomialMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&TermRecord { exponent: e.clone(), coeff: c.to_string() })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for MonomialMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let m = records.first().map_or(0, |r| r.exponent.len());
        let mut map = MonomialMap::new(m);
        for r in records {
            if r.exponent.len() != m {
                return Err(serde::de::Error::custom("exponents of different lengths"));
            }
            let c: BigInt = r.coeff.parse().map_err(serde::de::Error::custom)?;
            map.add_term(r.exponent, c);
        }
        Ok(map)
    }
}

fn repad(lambda: &Partition, m: usize) -> Result<Partition> {
    if lambda.m() == m {
        return Ok(lambda.clone());
    }
    if lambda.length() > m {
        return Err(Error::LengthMismatch { expected: m, found: lambda.length() });
    }
    let mut parts: Vec<u32> = lambda.parts()[..lambda.length()].to_vec();
    parts.resize(m, 0);
    Partition::new(parts)
}

/// Kostka number `K_{λ,α}`: SSYT of shape λ and content α. Letters are
/// added one at a time as horizontal strips.
pub fn kostka(lambda: &Partition, content: &[u32]) -> BigUint {
    let target = lambda.parts();
    let mut layer: HashMap<Vec<u32>, BigUint> = HashMap::new();
    layer.insert(vec![0; target.len()], BigUint::one());
    for &d in content {
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::new();
        for (nu, ways) in &layer {
            let mut cur = nu.clone();
            strips(nu, target, d, 0, &mut cur, &mut |s| *next.entry(s.to_vec()).or_default() += ways);
        }
        layer = next;
    }
    layer.remove(target).unwrap_or_default()
}

/// Visits every `ν'` with `ν ⊆ ν' ⊆ target`, `ν'/ν` a horizontal strip of
/// size `d`.
fn strips(nu: &[u32], target: &[u32], d: u32, r: usize, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if r == nu.len() {
        if d == 0 {
            f(cur);
        }
        return;
    }
    let cap = if r == 0 { target[0] } else { target[r].min(nu[r - 1]) };
    let max_add = cap.saturating_sub(nu[r]).min(d);
    for add in 0..=max_add {
        cur[r] = nu[r] + add;
        strips(nu, target, d - add, r + 1, cur, f);
    }
    cur[r] = nu[r];
}

/// `s_λ(x_1, …, x_m)` as a monomial map.
pub fn schur_expansion(lambda: &Partition, m: usize) -> Result<MonomialMap> {
    let lambda = repad(lambda, m)?;
    let mut map = MonomialMap::new(m);
    for mu in dominated_partitions(&lambda) {
        let k = BigInt::from(kostka(&lambda, mu.parts()));
        for e in orbit(mu.parts()) {
            map.add_term(e, k.clone());
        }
    }
    Ok(map)
}

/// `s_λ` by listing every tableau; a slow reference for `schur_expansion`.
pub fn schur_expansion_by_tableaux(lambda: &Partition, m: usize) -> Result<MonomialMap> {
    let lambda = repad(lambda, m)?;
    let mut map = MonomialMap::new(m);
    for t in enumerate_ssyt(&lambda, m as u32) {
        map.add_term(t.content(m), BigInt::one());
    }
    Ok(map)
}

/// `b_{h,λμ}`: fillings of `μ/λ` strictly increasing along rows and down
/// columns, with row `r` (1-based) drawing from `{1, …, h(r-1)}`.
pub fn skew_strict_fillings_count(h: u32, lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    if lambda.m() != mu.m() {
        return Err(Error::LengthMismatch { expected: lambda.m(), found: mu.m() });
    }
    if !lambda.is_contained_in(mu) {
        return Err(Error::NotContained { inner: lambda.to_string(), outer: mu.to_string() });
    }
    let lo: Vec<usize> = lambda.parts().iter().map(|&x| x as usize).collect();
    let hi: Vec<usize> = mu.parts().iter().map(|&x| x as usize).collect();
    let cells: Vec<(usize, usize)> = (0..lo.len()).flat_map(|r| (lo[r]..hi[r]).map(move |c| (r, c))).collect();
    let mut grid: HashMap<(usize, usize), u32> = HashMap::new();
    fn rec(i: usize, cells: &[(usize, usize)], h: u32, grid: &mut HashMap<(usize, usize), u32>) -> BigUint {
        if i == cells.len() {
            return BigUint::one();
        }
        let (r, c) = cells[i];
        let cap = h * r as u32;
        let mut lo = 1;
        if c > 0 {
            if let Some(&v) = grid.get(&(r, c - 1)) {
                lo = lo.max(v + 1);
            }
        }
        if r > 0 {
            if let Some(&v) = grid.get(&(r - 1, c)) {
                lo = lo.max(v + 1);
            }
        }
        let mut total = BigUint::zero();
        for v in lo..=cap {
            grid.insert((r, c), v);
            total += rec(i + 1, cells, h, grid);
        }
        grid.remove(&(r, c));
        total
    }
    Ok(rec(0, &cells, h, &mut grid))
}

/// The signed Schur coefficients `(-1)^{|μ/λ|} b_{h,λμ}` of `G_{h,λ}` for
/// every `μ` between `λ` and `λ^(N)`, ordered by weight.
pub fn grothendieck_schur_coefficients(h: u32, lambda: &Partition) -> Result<Vec<(Partition, BigInt)>> {
    let seq = dominating_sequence(h, lambda)?;
    let mut out = Vec::new();
    for mu in partitions_between(lambda, seq.top())? {
        let b = BigInt::from(skew_strict_fillings_count(h, lambda, &mu)?);
        let sign = (mu.weight() - lambda.weight()) % 2 == 1;
        out.push((mu, if sign { -b } else { b }));
    }
    Ok(out)
}

/// `G_{h,λ}(x_1, …, x_m)` as a monomial map.
pub fn grothendieck_expansion(h: u32, lambda: &Partition, m: usize) -> Result<MonomialMap> {
    let lambda = repad(lambda, m)?;
    let mut map = MonomialMap::new(m);
    for (mu, c) in grothendieck_schur_coefficients(h, &lambda)? {
        if c.is_zero() {
            continue;
        }
        map.add_scaled(&schur_expansion(&mu, m)?, &c);
    }
    Ok(map)
}

/// Saturated Newton polytope check: the support equals `points`, and every
/// support exponent passes `member`.
pub fn snp_check(poly: &MonomialMap, member: impl Fn(&[u32]) -> bool, points: &[Point]) -> bool {
    let support: HashSet<&Point> = poly.terms.keys().collect();
    let pts: HashSet<&Point> = points.iter().collect();
    support.len() == pts.len() && support == pts && support.iter().all(|e| member(e))
}

/// Whether every coefficient is positive.
pub fn is_positive(poly: &MonomialMap) -> bool {
    poly.terms.values().all(|c| c.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::binomial;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(enumerate_ssyt(&p(&[3, 0, 0]), 3).len(), 10);
        assert_eq!(enumerate_ssyt(&p(&[2, 1, 0]), 3).len(), 8);
        assert_eq!(enumerate_ssyt(&p(&[1, 1]), 1).len(), 0);
        let all = enumerate_ssyt(&p(&[2, 2, 1]), 4);
        assert!(all.iter().all(|t| t.is_semistandard(4)));
        assert!(all.windows(2).all(|w| w[0].reading_word() < w[1].reading_word()));
    }

    #[test]
    fn schur_examples() {
        let s = schur_expansion(&p(&[2, 1, 0]), 3).unwrap();
        assert_eq!(s.coeff(&[1, 1, 1]), BigInt::from(2));
        assert_eq!(s.len(), 7);
        assert!(s.is_symmetric());
        let s = schur_expansion(&p(&[3, 0, 0]), 3).unwrap();
        assert_eq!(s.coeff(&[3, 0, 0]), BigInt::one());
    }

    #[test]
    fn kostka_matches_tableaux() {
        for n in 0..=6u64 {
            for m in 1..=4usize {
                for lam in crate::partitions::partitions_of(n, m, n as u32) {
                    assert_eq!(schur_expansion(&lam, m).unwrap(), schur_expansion_by_tableaux(&lam, m).unwrap(), "{lam}");
                }
            }
        }
    }

    #[test]
    fn single_row_total() {
        for k in 0..6u32 {
            for m in 1..5usize {
                let mut v = vec![0; m];
                v[0] = k;
                let s = schur_expansion(&p(&v), m).unwrap();
                assert_eq!(s.coefficient_sum(), BigInt::from(binomial(k as u64 + m as u64 - 1, m as u64 - 1)));
            }
        }
    }

    #[test]
    fn skew_counts() {
        let c = |h, a: &[u32], b: &[u32]| skew_strict_fillings_count(h, &p(a), &p(b)).unwrap();
        assert_eq!(c(1, &[2, 1, 0], &[2, 1, 1]), BigUint::from(2u32));
        assert_eq!(c(2, &[2, 1, 0], &[2, 2, 2]), BigUint::from(11u32));
        assert_eq!(c(3, &[2, 1, 0], &[2, 1, 0]), BigUint::one());
        assert!(skew_strict_fillings_count(1, &p(&[2, 1, 0]), &p(&[3, 0, 0])).is_err());
    }

    #[test]
    fn grothendieck_coefficients() {
        let coeffs = |h| -> Vec<(String, i64)> {
            grothendieck_schur_coefficients(h, &p(&[2, 1, 0]))
                .unwrap()
                .into_iter()
                .map(|(mu, c)| (mu.to_string(), i64::try_from(c).unwrap()))
                .collect()
        };
        let want = |v: [i64; 5]| -> Vec<(String, i64)> {
            ["2,1,0", "2,2,0", "2,1,1", "2,2,1", "2,2,2"].iter().map(|s| s.to_string()).zip(v).collect()
        };
        assert_eq!(coeffs(1), want([1, -1, -2, 2, -1]));
        assert_eq!(coeffs(2), want([1, -2, -4, 8, -11]));
        let g = grothendieck_expansion(2, &p(&[0, 0, 0]), 3).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.coeff(&[0, 0, 0]), BigInt::one());
    }

    #[test]
    fn snp_examples() {
        let lam = p(&[2, 1, 0]);
        let s = schur_expansion(&lam, 3).unwrap();
        let pts = crate::permutohedron::lattice_points(&lam).unwrap();
        assert!(snp_check(&s, |q| crate::permutohedron::contains(&lam, q), &pts));
        let g = grothendieck_expansion(1, &lam, 3).unwrap();
        let poly = crate::grothendieck::GrothendieckPolytope::new(1, &lam).unwrap();
        let gpts = poly.lattice_points().unwrap();
        assert!(snp_check(&g, |q| poly.contains(q), &gpts));
        let mut cut = s.clone();
        cut.remove(&[1, 1, 1]);
        assert!(!snp_check(&cut, |q| crate::permutohedron::contains(&lam, q), &pts));
    }

    #[test]
    fn json_records() {
        let s = schur_expansion(&p(&[1, 0]), 2).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"[{"exponent":[0,1],"coeff":"1"},{"exponent":[1,0],"coeff":"1"}]"#);
        let back: MonomialMap = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn column_split() {
        let t = Tableau { shape: p(&[3, 1]), rows: vec![vec![1, 1, 2], vec![2]] };
        let a = t.column_class(0, 2);
        assert_eq!(a.rows, vec![vec![1, 2], vec![2]]);
        assert!(a.is_semistandard(2));
        assert_eq!(t.column_class(1, 2).rows, vec![vec![1], vec![]]);
    }
}
