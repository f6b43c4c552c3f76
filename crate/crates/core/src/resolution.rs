//! Truncated minimal free resolutions of cokernels and the ranks predicted
//! for the generic map by the conjectured equivariant resolution.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schur::{hook_schur_dim_by_parity, lambda_de, partitions_of, Partition};
use crate::supermodule::{GradedFreeModule, GradedMatrix, ModulePiece};

/// Free generators per homological degree beyond which [`resolve`] stops
/// and flags the table as capped.
pub const GENERATOR_CAP: usize = 4000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: i32,
    pub even: u128,
    pub odd: u128,
}

/// Ranks of the free modules of a resolution, per homological degree `i`,
/// internal degree `j` and parity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: Vec<BettiEntry>,
    pub i_max: usize,
    pub j_max: i32,
    /// The resolution was seen to stop inside the window.
    pub finite: bool,
    /// A resource cap cut the computation short.
    pub capped: bool,
}

impl BettiTable {
    pub fn new(i_max: usize, j_max: i32) -> Self {
        BettiTable { i_max, j_max, ..Default::default() }
    }

    /// Adds ranks, merging with an existing entry.
    pub fn add(&mut self, i: usize, j: i32, even: u128, odd: u128) {
        if even == 0 && odd == 0 {
            return;
        }
        match self.entries.binary_search_by_key(&(i, j), |e| (e.i, e.j)) {
            Ok(k) => {
                self.entries[k].even += even;
                self.entries[k].odd += odd;
            }
            Err(k) => self.entries.insert(k, BettiEntry { i, j, even, odd }),
        }
    }

    fn add_module(&mut self, i: usize, module: &GradedFreeModule) {
        for (k, &tw) in module.twists.iter().enumerate() {
            if tw <= self.j_max {
                let (e, o) = if module.parity(k) == 0 { (1, 0) } else { (0, 1) };
                self.add(i, tw, e, o);
            }
        }
    }

    pub fn get(&self, i: usize, j: i32) -> (u128, u128) {
        match self.entries.binary_search_by_key(&(i, j), |e| (e.i, e.j)) {
            Ok(k) => (self.entries[k].even, self.entries[k].odd),
            Err(_) => (0, 0),
        }
    }

    /// `(even, odd)` summed over internal degrees.
    pub fn ranks(&self, i: usize) -> (u128, u128) {
        self.entries.iter().filter(|e| e.i == i).fold((0, 0), |(a, b), e| (a + e.even, b + e.odd))
    }

    pub fn total(&self, i: usize) -> u128 {
        let (a, b) = self.ranks(i);
        a + b
    }

    /// The same table restricted to `i <= i_max`, `j <= j_max`.
    pub fn window(&self, i_max: usize, j_max: i32) -> BettiTable {
        let mut out = BettiTable::new(i_max, j_max);
        out.finite = self.finite;
        out.capped = self.capped;
        for e in self.entries.iter().filter(|e| e.i <= i_max && e.j <= j_max) {
            out.add(e.i, e.j, e.even, e.odd);
        }
        out
    }
}

impl fmt::Display for BettiTable {
    /// Rows are internal degrees, columns homological degrees; an entry
    /// `a|b` has `a` even and `b` odd generators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let js: Vec<i32> = {
            let mut v: Vec<i32> = self.entries.iter().map(|e| e.j).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let cell = |i: usize, j: i32| {
            let (a, b) = self.get(i, j);
            if a == 0 && b == 0 {
                ".".to_string()
            } else {
                format!("{a}|{b}")
            }
        };
        let width = (0..=self.i_max)
            .flat_map(|i| js.iter().map(move |&j| (i, j)))
            .map(|(i, j)| cell(i, j).len())
            .max()
            .unwrap_or(1)
            .max(3);
        write!(f, "{:>5}", "j\\i")?;
        for i in 0..=self.i_max {
            write!(f, " {:>width$}", i)?;
        }
        writeln!(f)?;
        for &j in &js {
            write!(f, "{:>5}", j)?;
            for i in 0..=self.i_max {
                write!(f, " {:>width$}", cell(i, j))?;
            }
            writeln!(f)?;
        }
        let mut notes = Vec::new();
        if self.finite {
            notes.push("finite");
        }
        if self.capped {
            notes.push("capped");
        }
        write!(f, "window i <= {}, j <= {}{}", self.i_max, self.j_max, if notes.is_empty() { String::new() } else { format!(" ({})", notes.join(", ")) })
    }
}

/// A computed truncated resolution: `maps[k]` is `d_{k+1}: F_{k+1} -> F_k`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub maps: Vec<GradedMatrix>,
    pub table: BettiTable,
}

impl Resolution {
    pub fn module(&self, i: usize) -> Option<&GradedFreeModule> {
        if i == 0 {
            self.maps.first().map(|d| &d.target)
        } else {
            self.maps.get(i - 1).map(|d| &d.source)
        }
    }
}

/// Keeps a minimal generating set of the image of `m` among columns of
/// degree `<= j_max`, by graded Nakayama: a column survives when it is not
/// in the span of the submodule generated by the columns kept before it.
fn minimal_columns(m: &GradedMatrix, j_max: i32) -> Result<GradedMatrix> {
    let mut order: Vec<usize> = (0..m.cols()).filter(|&j| m.source.twists[j] <= j_max && !m.column(j).is_zero()).collect();
    order.sort_by_key(|&j| (m.source.twists[j], j));
    let mut kept: Vec<usize> = Vec::new();
    let mut idx = 0;
    while idx < order.len() {
        let s = m.source.twists[order[idx]];
        let piece = ModulePiece::new(&m.ring, &m.target, s);
        let mut span = piece.image_span(&columns_of(m, &kept)?);
        while idx < order.len() && m.source.twists[order[idx]] == s {
            let j = order[idx];
            if span.insert(&piece.coords(&m.column(j))) {
                kept.push(j);
            }
            idx += 1;
        }
    }
    columns_of(m, &kept)
}

fn columns_of(m: &GradedMatrix, cols: &[usize]) -> Result<GradedMatrix> {
    let mut cols = cols.to_vec();
    cols.sort_by_key(|&j| (m.source.parity(j), m.source.twists[j], j));
    let rank_even = cols.iter().filter(|&&j| m.source.parity(j) == 0).count();
    let source = GradedFreeModule::new(rank_even, cols.len() - rank_even, cols.iter().map(|&j| m.source.twists[j]).collect())?;
    let entries = m.entries.iter().map(|row| cols.iter().map(|&j| row[j].clone()).collect()).collect();
    GradedMatrix::new(&m.ring, m.target.clone(), source, entries)
}

/// Minimal free resolution of `coker φ` through homological degree `i_max`
/// and internal degree `j_max`, keeping the differentials.
pub fn resolve_complex(phi: &GradedMatrix, i_max: usize, j_max: i32) -> Result<Resolution> {
    let mut table = BettiTable::new(i_max, j_max);
    let d1 = minimal_columns(&phi.minimalize(), j_max)?;
    table.add_module(0, &d1.target);
    let mut maps = Vec::new();
    if i_max == 0 {
        return Ok(Resolution { maps: vec![d1], table });
    }
    table.add_module(1, &d1.source);
    maps.push(d1);
    for i in 2..=i_max {
        let prev = maps.last().expect("d_1 is present");
        if prev.cols() == 0 {
            table.finite = true;
            break;
        }
        let (syz, complete) = prev.syzygies_truncated(Some(j_max))?;
        let next = minimal_columns(&syz, j_max)?;
        if next.cols() > GENERATOR_CAP {
            table.capped = true;
            break;
        }
        table.add_module(i, &next.source);
        let stops = next.cols() == 0 && complete;
        maps.push(next);
        if stops {
            table.finite = true;
            break;
        }
    }
    Ok(Resolution { maps, table })
}

/// Betti table of the minimal free resolution of `coker φ` within the window.
pub fn resolve(phi: &GradedMatrix, i_max: usize, j_max: i32) -> Result<BettiTable> {
    Ok(resolve_complex(phi, i_max, j_max)?.table)
}

/// Checks of a computed resolution within its window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexChecks {
    pub compositions_vanish: bool,
    pub minimal: bool,
    /// `(i, s, dim H_i in degree s)` for every checked pair.
    pub homology: Vec<(usize, i32, i64)>,
    /// `(s, Σ (−1)^i dim (F_i)_s, dim (coker)_s)`.
    pub euler: Vec<(i32, i64, i64)>,
}

impl ComplexChecks {
    pub fn passed(&self) -> bool {
        self.compositions_vanish
            && self.minimal
            && self.homology.iter().all(|h| h.2 == 0)
            && self.euler.iter().all(|e| e.1 == e.2)
    }
}

fn image_rank(d: &GradedMatrix, s: i32) -> i64 {
    ModulePiece::new(&d.ring, &d.target, s).image_span(d).dim() as i64
}

/// `d∘d = 0`, minimality of every differential, vanishing homology at
/// `F_1, …` in internal degrees `<= j_max`, and the Euler characteristic
/// against `dim coker` in the degrees the window determines.
pub fn check_complex(res: &Resolution) -> Result<ComplexChecks> {
    let j_max = res.table.j_max;
    let mut compositions_vanish = true;
    for w in res.maps.windows(2) {
        compositions_vanish &= w[0].compose(&w[1])?.is_zero();
    }
    let minimal = res.maps.iter().all(|d| d.is_minimal());
    let mut homology = Vec::new();
    for i in 1..res.maps.len() {
        let (d_i, d_next) = (&res.maps[i - 1], &res.maps[i]);
        for s in 0..=j_max {
            let dim = ModulePiece::new(&d_i.ring, &d_i.source, s).len() as i64;
            homology.push((i, s, dim - image_rank(d_i, s) - image_rank(d_next, s)));
        }
    }
    let last = res.maps.len();
    let valid_to = if res.table.finite {
        j_max
    } else {
        res.module(last).and_then(|m| m.twists.iter().copied().min()).map_or(j_max, |t| t.min(j_max))
    };
    let mut euler = Vec::new();
    if let Some(d1) = res.maps.first() {
        for s in 0..=valid_to {
            let mut alt = 0i64;
            for i in 0..=last {
                let m = res.module(i).expect("modules 0..=len exist");
                let dim = ModulePiece::new(&d1.ring, m, s).len() as i64;
                alt += if i % 2 == 0 { dim } else { -dim };
            }
            euler.push((s, alt, d1.cokernel_dim(s) as i64));
        }
    }
    Ok(ComplexChecks { compositions_vanish, minimal, homology, euler })
}

/// How to read the shapes in the conjectured resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeReading {
    /// `F_i = ⊕ 𝒮_Θ V ⊗ 𝒮_Λ U` with `Λ = (d+1+β_1, …, d+1+β_e, e, α')`,
    /// `Θ = (d+1+α_1, …, d+1+α_e, e+1, β')`, `ℓ(α), ℓ(β) <= e`.
    Literal,
    /// `F_i = ⊕ ∧^Θ V ⊗ ∧^Λ U` with `Λ = (d+1+β_1, …, d+1+β_e, d, α')`,
    /// `Θ = (d+1+α_1, …, d+1+α_{e+1}, β')`, `ℓ(α) <= e+1`, `ℓ(β) <= e`.
    /// For `e = 0` this is the Buchsbaum–Rim complex.
    Exterior,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contribution {
    pub i: usize,
    pub alpha: Partition,
    pub beta: Partition,
    pub theta: Partition,
    pub lambda: Partition,
    pub dim_v: [u128; 2],
    pub dim_u: [u128; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlaggedShape {
    pub i: usize,
    pub alpha: Partition,
    pub beta: Partition,
    pub theta: Vec<u32>,
    pub lambda: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjecturePrediction {
    pub reading: ShapeReading,
    pub table: BettiTable,
    pub summands: Vec<Contribution>,
    /// Pairs whose displayed shapes are not partitions; excluded.
    pub flagged: Vec<FlaggedShape>,
    pub parity_rule: String,
}

pub const PARITY_RULE: &str = "a summand's basis element has the parity of its number of odd tensor factors \
     (primed entries of both hook tableaux), with no shift; this matches F_0 = U* and F_1 = V";

fn shapes(reading: ShapeReading, d: u32, e: u32, alpha: &Partition, beta: &Partition) -> (Vec<u32>, Vec<u32>) {
    let e_us = e as usize;
    let (lam_mid, theta_rows, theta_mid): (u32, usize, Option<u32>) = match reading {
        ShapeReading::Literal => (e, e_us, Some(e + 1)),
        ShapeReading::Exterior => (d, e_us + 1, None),
    };
    let mut lambda: Vec<u32> = (0..e_us).map(|k| d + 1 + beta.part(k)).collect();
    lambda.push(lam_mid);
    lambda.extend(alpha.conjugate().parts());
    let mut theta: Vec<u32> = (0..theta_rows).map(|k| d + 1 + alpha.part(k)).collect();
    theta.extend(theta_mid);
    theta.extend(beta.conjugate().parts());
    (theta, lambda)
}

fn convolve(a: [u128; 2], b: [u128; 2]) -> [u128; 2] {
    [a[0] * b[0] + a[1] * b[1], a[0] * b[1] + a[1] * b[0]]
}

/// Ranks of the conjectured resolution of `coker Φ` for the generic map of
/// type `(d, e, m, n)`: `F_0 = U*` in degree 0, `F_1 = V` in degree 1, and
/// for `i >= 2` the sum over `|α| + |β| = i − 2`, generated in degree
/// `i − 1 + |Λ(d,e)|`. Summands with a vanishing factor are skipped.
pub fn predict_conjecture41(d: usize, e: usize, m: usize, n: usize, i_max: usize, reading: ShapeReading) -> ConjecturePrediction {
    let mut table = BettiTable::new(i_max, i32::MAX);
    table.add(0, 0, d as u128, e as u128);
    if i_max >= 1 {
        table.add(1, 1, m as u128, n as u128);
    }
    let (du, eu) = (d as u32, e as u32);
    let base = lambda_de(du, eu).size() as i32;
    let alpha_parts = match reading {
        ShapeReading::Literal => e,
        ShapeReading::Exterior => e + 1,
    };
    let mut summands = Vec::new();
    let mut flagged = Vec::new();
    for i in 2..=i_max {
        let k = (i - 2) as u32;
        for a in 0..=k {
            for alpha in partitions_of(a, Some(alpha_parts), None) {
                for beta in partitions_of(k - a, Some(e), None) {
                    let (theta, lambda) = shapes(reading, du, eu, &alpha, &beta);
                    let (Ok(th), Ok(la)) = (Partition::new(theta.clone()), Partition::new(lambda.clone())) else {
                        flagged.push(FlaggedShape { i, alpha: alpha.clone(), beta: beta.clone(), theta, lambda });
                        continue;
                    };
                    let (dim_v, dim_u) = match reading {
                        ShapeReading::Literal => (hook_schur_dim_by_parity(&th, m, n), hook_schur_dim_by_parity(&la, d, e)),
                        ShapeReading::Exterior => (
                            hook_schur_dim_by_parity(&th.conjugate(), m, n),
                            hook_schur_dim_by_parity(&la.conjugate(), d, e),
                        ),
                    };
                    let dims = convolve(dim_v, dim_u);
                    if dims == [0, 0] {
                        continue;
                    }
                    table.add(i, i as i32 - 1 + base, dims[0], dims[1]);
                    summands.push(Contribution { i, alpha: alpha.clone(), beta: beta.clone(), theta: th, lambda: la, dim_v, dim_u });
                }
            }
        }
    }
    ConjecturePrediction { reading, table, summands, flagged, parity_rule: PARITY_RULE.to_string() }
}

/// Ranks of the Buchsbaum–Rim resolution of a generic `d × m` matrix,
/// `m >= d`: `F_i` has rank `C(m, d+i−1)·C(d+i−3, i−2)` in degree `d+i−1`
/// for `2 <= i <= m−d+1`.
pub fn buchsbaum_rim(d: usize, m: usize, i_max: usize) -> Result<BettiTable> {
    if m < d {
        return Err(Error::Unsupported(format!("Buchsbaum–Rim needs m >= d, got d = {d}, m = {m}")));
    }
    fn binom(n: i64, k: i64) -> u128 {
        if k < 0 || n < k {
            return 0;
        }
        (0..k).fold(1u128, |acc, t| acc * (n - t) as u128 / (t + 1) as u128)
    }
    let mut table = BettiTable::new(i_max, i32::MAX);
    table.add(0, 0, d as u128, 0);
    if i_max >= 1 {
        table.add(1, 1, m as u128, 0);
    }
    for i in 2..=i_max.min(m + 1 - d) {
        let (di, ii) = (d as i64, i as i64);
        table.add(i, (d + i - 1) as i32, binom(m as i64, di + ii - 1) * binom(di + ii - 3, ii - 2), 0);
    }
    table.finite = true;
    Ok(table)
}

/// Even and odd rank.
pub type Ranks = (u128, u128);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeVerdict {
    pub i: usize,
    pub actual: Ranks,
    pub predicted: Ranks,
    pub totals_match: bool,
    pub parities_match: bool,
    /// `(j, actual, predicted)` where they differ.
    pub diffs: Vec<(i32, Ranks, Ranks)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub i_max: usize,
    pub j_max: i32,
    pub verdicts: Vec<DegreeVerdict>,
}

impl Comparison {
    /// Total ranks agree in every internal degree of the window.
    pub fn totals_match(&self) -> bool {
        self.verdicts.iter().all(|v| v.totals_match)
    }

    pub fn exact_match(&self) -> bool {
        self.verdicts.iter().all(|v| v.totals_match && v.parities_match)
    }
}

/// Entry-by-entry comparison inside the window common to both tables.
pub fn compare(actual: &BettiTable, predicted: &BettiTable) -> Comparison {
    let i_max = actual.i_max.min(predicted.i_max);
    let j_max = actual.j_max.min(predicted.j_max);
    let (a, p) = (actual.window(i_max, j_max), predicted.window(i_max, j_max));
    let mut verdicts = Vec::new();
    for i in 0..=i_max {
        let mut js: BTreeMap<i32, (Ranks, Ranks)> = BTreeMap::new();
        for e in a.entries.iter().filter(|e| e.i == i) {
            js.entry(e.j).or_default().0 = (e.even, e.odd);
        }
        for e in p.entries.iter().filter(|e| e.i == i) {
            js.entry(e.j).or_default().1 = (e.even, e.odd);
        }
        let diffs: Vec<_> = js.iter().filter(|(_, (x, y))| x != y).map(|(&j, &(x, y))| (j, x, y)).collect();
        let totals_match = js.values().all(|(x, y)| x.0 + x.1 == y.0 + y.1);
        verdicts.push(DegreeVerdict { i, actual: a.ranks(i), predicted: p.ranks(i), totals_match, parities_match: diffs.is_empty(), diffs });
    }
    Comparison { i_max, j_max, verdicts }
}

/// The default window `j_max = |Λ(d,e)| + 4`.
pub fn default_j_max(d: usize, e: usize) -> i32 {
    lambda_de(d as u32, e as u32).size() as i32 + 4
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fitting::GenericSetup;

    #[test]
    fn buchsbaum_rim_of_two_by_three() {
        let s = GenericSetup::new(2, 0, 3, 0, 0).unwrap();
        let res = resolve_complex(&s.phi, 4, 6).unwrap();
        assert_eq!(res.table.ranks(0), (2, 0));
        assert_eq!(res.table.ranks(1), (3, 0));
        assert_eq!(res.table.get(2, 3), (1, 0));
        assert_eq!(res.table.total(3), 0);
        assert!(res.table.finite);
        assert!(check_complex(&res).unwrap().passed());
        let br = buchsbaum_rim(2, 3, 4).unwrap();
        assert!(compare(&res.table, &br).exact_match());
    }

    #[test]
    fn identity_resolves_to_nothing() {
        let s = GenericSetup::new(1, 1, 1, 1, 0).unwrap();
        let id = GradedMatrix::identity(&s.ring, &GradedFreeModule::uniform(1, 1, 0));
        let t = resolve(&id, 3, 4).unwrap();
        assert_eq!(t.total(0), 0);
        assert_eq!(t.total(1), 0);
    }

    #[test]
    fn presentation_ranks_of_the_generic_map() {
        let s = GenericSetup::new(1, 1, 1, 1, 0).unwrap();
        let t = resolve(&s.phi, 1, 5).unwrap();
        assert_eq!(t.get(0, 0), (1, 1));
        assert_eq!(t.get(1, 1), (1, 1));
    }

    #[test]
    fn prediction_low_degrees() {
        for reading in [ShapeReading::Literal, ShapeReading::Exterior] {
            let p = predict_conjecture41(1, 2, 3, 1, 1, reading);
            assert_eq!(p.table.get(0, 0), (1, 2));
            assert_eq!(p.table.get(1, 1), (3, 1));
        }
    }

    #[test]
    fn exterior_reading_is_buchsbaum_rim_for_even_maps() {
        for d in 1..=3 {
            for m in d..=5 {
                let p = predict_conjecture41(d, 0, m, 0, 6, ShapeReading::Exterior);
                let br = buchsbaum_rim(d, m, 6).unwrap();
                assert_eq!(p.table.entries, br.entries, "d = {d}, m = {m}");
            }
        }
    }

    #[test]
    fn literal_reading_of_even_maps() {
        // S_(1) V in degree |Λ(2,0)| + 1, and nothing after it
        let p = predict_conjecture41(2, 0, 3, 0, 3, ShapeReading::Literal);
        assert_eq!(p.table.get(2, 3), (3, 0));
        assert_eq!(p.table.total(3), 0);
        let p = predict_conjecture41(1, 1, 1, 1, 4, ShapeReading::Literal);
        assert!(p.flagged.iter().all(|f| Partition::new(f.lambda.clone()).is_err() || Partition::new(f.theta.clone()).is_err()));
    }

    #[test]
    fn identical_tables_match() {
        let br = buchsbaum_rim(2, 4, 4).unwrap();
        let c = compare(&br, &br);
        assert!(c.exact_match());
        assert_eq!(c.verdicts.len(), 5);
    }

    #[test]
    fn table_renders() {
        let text = buchsbaum_rim(2, 3, 2).unwrap().to_string();
        assert!(text.contains("2|0"));
        assert!(text.contains("1|0"));
    }
}
