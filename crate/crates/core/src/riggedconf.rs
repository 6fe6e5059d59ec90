//! Rigged configurations: configurations with vacancy numbers, riggings,
//! cocharge and charge, the fermionic polynomial, and the complement,
//! transpose, duality and ζ maps.
//!
//! A configuration of type (λ;R) is a sequence of partitions ν^k whose
//! sizes are forced by λ and R; it is admissible when every vacancy number
//! P_{k,n} is nonnegative.  Labels bounded by the vacancy numbers turn an
//! admissible configuration into a rigged configuration.  The labelling
//! convention (coquantum or quantum) is explicit data: the two statistics
//! refuse the wrong convention rather than guessing.

use crate::error::{add, choose2, Error, Result};
use crate::partition::Partition;
use crate::qpoly::{q_binomial, QPolynomial};
use crate::rect::{Rect, RectangleSequence};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;

/// Which of the complementary labelling conventions a rigging uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Coquantum,
    Quantum,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Coquantum => "coquantum",
            Convention::Quantum => "quantum",
        }
    }
}

/// A configuration of type (λ;R).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    lambda: Partition,
    rects: RectangleSequence,
    nus: Vec<Partition>,
}

/// Sizes |ν^k| forced by the type, None when some size is negative.
pub fn forced_sizes(lambda: &Partition, rects: &RectangleSequence) -> Option<Vec<i64>> {
    let depth = lambda
        .len()
        .max(rects.rects().iter().map(|r| r.rows).max().unwrap_or(0) as usize);
    let mut sizes = Vec::with_capacity(depth);
    for k in 1..=depth as i64 {
        let tail: i64 = (k + 1..=lambda.len() as i64).map(|j| lambda.part(j as usize)).sum();
        let used: i64 =
            rects.rects().iter().map(|r| r.cols * (r.rows - k).max(0)).sum();
        let size = tail - used;
        if size < 0 {
            return None;
        }
        sizes.push(size);
    }
    while sizes.last() == Some(&0) {
        sizes.pop();
    }
    Some(sizes)
}

impl Configuration {
    /// Validate the size condition and build.
    pub fn new(lambda: Partition, rects: RectangleSequence, nus: Vec<Partition>) -> Result<Self> {
        let mut nus = nus;
        while nus.last().is_some_and(|p| p.is_empty()) {
            nus.pop();
        }
        let sizes = forced_sizes(&lambda, &rects).ok_or_else(|| {
            Error::Format(format!("type (λ={lambda}; R={rects}) forces a negative size"))
        })?;
        if nus.len() > sizes.len()
            || (0..sizes.len().max(nus.len())).any(|k| {
                nus.get(k).map_or(0, Partition::size) != sizes.get(k).copied().unwrap_or(0)
            })
        {
            return Err(Error::Format(format!(
                "sizes {:?} do not match the forced sizes {sizes:?}",
                nus.iter().map(Partition::size).collect::<Vec<_>>()
            )));
        }
        Ok(Configuration { lambda, rects, nus })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn rects(&self) -> &RectangleSequence {
        &self.rects
    }

    pub fn nus(&self) -> &[Partition] {
        &self.nus
    }

    /// ν^k, the empty partition beyond the stored depth (and for k = 0).
    pub fn nu(&self, k: i64) -> Partition {
        if k >= 1 && (k as usize) <= self.nus.len() {
            self.nus[(k - 1) as usize].clone()
        } else {
            Partition::empty()
        }
    }

    /// α_{k,n} = size of the n-th column of ν^k.
    pub fn alpha(&self, k: i64, n: i64) -> i64 {
        if k < 1 || (k as usize) > self.nus.len() || n < 1 {
            return 0;
        }
        self.nus[(k - 1) as usize].parts().iter().filter(|&&p| p >= n).count() as i64
    }

    /// Multiplicity of the part size n in ν^k.
    pub fn m_multiplicity(&self, k: i64, n: i64) -> i64 {
        if k < 1 || (k as usize) > self.nus.len() {
            return 0;
        }
        self.nus[(k - 1) as usize].multiplicity(n)
    }

    /// Vacancy number P_{k,n}; P_{k,0} = 0 by convention.
    pub fn vacancy(&self, k: i64, n: i64) -> i64 {
        assert!(k >= 1 && n >= 0);
        if n == 0 {
            return 0;
        }
        let q = |k: i64| -> i64 {
            if k >= 1 && (k as usize) <= self.nus.len() {
                self.nus[(k - 1) as usize].cells_in_first_columns(n)
            } else {
                0
            }
        };
        let rect_term: i64 = self
            .rects
            .rects()
            .iter()
            .filter(|r| r.rows == k)
            .map(|r| r.cols.min(n))
            .sum();
        q(k - 1) - 2 * q(k) + q(k + 1) + rect_term
    }

    /// Depth bound: indices k worth inspecting.
    pub fn depth_bound(&self) -> i64 {
        (self.nus.len() as i64)
            .max(self.rects.rects().iter().map(|r| r.rows).max().unwrap_or(0))
            .max(self.lambda.len() as i64)
            + 1
    }

    /// Column bound: part sizes n beyond which all vacancy data is constant.
    pub fn width_bound(&self) -> i64 {
        self.nus
            .iter()
            .map(|p| p.part(1))
            .chain(self.rects.rects().iter().map(|r| r.cols))
            .chain(std::iter::once(self.lambda.part(1)))
            .max()
            .unwrap_or(0)
            + 1
    }

    /// Admissibility under the chosen test; the three modes agree.
    pub fn is_admissible(&self, mode: AdmissibleMode) -> bool {
        let depth = self.depth_bound();
        let width = self.width_bound();
        for k in 1..=depth {
            for n in 1..=width {
                match mode {
                    AdmissibleMode::Direct => {
                        if self.vacancy(k, n) < 0 {
                            return false;
                        }
                    }
                    AdmissibleMode::Support => {
                        if self.m_multiplicity(k, n) > 0 && self.vacancy(k, n) < 0 {
                            return false;
                        }
                    }
                    AdmissibleMode::Strengthened => {
                        let bound = self.lambda.part(k as usize).min(n)
                            - self.lambda.part(k as usize + 1).min(n);
                        if self.vacancy(k, n) < bound {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// cocharge(ν) = Σ α_{k,n}(α_{k,n} - α_{k+1,n}).
    pub fn cocharge(&self) -> i64 {
        let width = self.width_bound();
        let mut total = 0;
        for k in 1..=self.nus.len() as i64 {
            for n in 1..=width {
                let a = self.alpha(k, n);
                total = add(total, a * (a - self.alpha(k + 1, n)));
            }
        }
        total
    }

    /// charge(ν) = Σ C(m_{k,n} + r_{k,n}(R), 2) with m the difference matrix.
    pub fn charge(&self) -> i64 {
        let depth = self.depth_bound();
        let width = self.width_bound();
        let mut total = 0;
        for k in 1..=depth {
            for n in 1..=width {
                let m = self.alpha(k - 1, n) - self.alpha(k, n);
                let r = self.rects.r_count(k, n);
                total = add(total, choose2(m + r));
            }
        }
        total
    }
}

/// The three equivalent admissibility tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdmissibleMode {
    /// P_{k,n} ≥ 0 everywhere.
    Direct,
    /// P_{k,n} ≥ 0 where m_n(ν^k) > 0.
    Support,
    /// P_{k,n} ≥ min(λ_k,n) - min(λ_{k+1},n).
    Strengthened,
}

/// All admissible configurations of type (λ;R), deterministic order.
pub fn enumerate_configurations(
    lambda: &Partition,
    rects: &RectangleSequence,
) -> Vec<Configuration> {
    enumerate_size_valid(lambda, rects, true)
}

/// All size-valid configurations; `capped` restricts parts of ν^k to
/// λ_{k+1} (sound for admissible configurations) and filters by the
/// support-mode test.
pub fn enumerate_size_valid(
    lambda: &Partition,
    rects: &RectangleSequence,
    capped: bool,
) -> Vec<Configuration> {
    if lambda.size() != rects.total_cells() {
        return Vec::new();
    }
    let Some(sizes) = forced_sizes(lambda, rects) else {
        return Vec::new();
    };
    let mut levels: Vec<Vec<Partition>> = Vec::with_capacity(sizes.len());
    for (k0, &size) in sizes.iter().enumerate() {
        let cap = if capped { lambda.part(k0 + 2) } else { size };
        levels.push(Partition::enumerate(size, cap));
        if levels.last().unwrap().is_empty() && size > 0 {
            return Vec::new();
        }
    }
    let mut out = Vec::new();
    let mut choice: Vec<usize> = vec![0; levels.len()];
    'outer: loop {
        let nus: Vec<Partition> =
            choice.iter().zip(&levels).map(|(&c, l)| l[c].clone()).collect();
        if let Ok(config) = Configuration::new(lambda.clone(), rects.clone(), nus) {
            if !capped || config.is_admissible(AdmissibleMode::Support) {
                out.push(config);
            }
        }
        for i in (0..levels.len()).rev() {
            choice[i] += 1;
            if choice[i] < levels[i].len() {
                continue 'outer;
            }
            choice[i] = 0;
        }
        break;
    }
    if levels.is_empty() {
        // the unique all-empty configuration
        out.clear();
        if let Ok(config) = Configuration::new(lambda.clone(), rects.clone(), Vec::new()) {
            out.push(config);
        }
    }
    out
}

/// A rigging on top of an admissible configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiggedConfiguration {
    config: Configuration,
    labels: Vec<Vec<i64>>,
    convention: Convention,
}

impl RiggedConfiguration {
    /// Validate bounds and normalize equal-size blocks to weakly decreasing.
    pub fn new(
        config: Configuration,
        mut labels: Vec<Vec<i64>>,
        convention: Convention,
    ) -> Result<Self> {
        if labels.len() != config.nus.len() {
            return Err(Error::Format(format!(
                "{} label rows for {} partitions",
                labels.len(),
                config.nus.len()
            )));
        }
        for (k0, nu) in config.nus.iter().enumerate() {
            if labels[k0].len() != nu.len() {
                return Err(Error::Format(format!(
                    "labels for ν^{} have length {}, want {}",
                    k0 + 1,
                    labels[k0].len(),
                    nu.len()
                )));
            }
            // normalize: per part size, weakly decreasing
            let mut s = 0;
            while s < nu.len() {
                let size = nu.parts()[s];
                let mut e = s;
                while e < nu.len() && nu.parts()[e] == size {
                    e += 1;
                }
                labels[k0][s..e].sort_unstable_by(|a, b| b.cmp(a));
                s = e;
            }
            for (s, &label) in labels[k0].iter().enumerate() {
                let bound = config.vacancy(k0 as i64 + 1, nu.parts()[s]);
                if label < 0 || label > bound {
                    return Err(Error::Format(format!(
                        "label {label} out of [0,{bound}] on row {} of ν^{}",
                        s + 1,
                        k0 + 1
                    )));
                }
            }
        }
        Ok(RiggedConfiguration { config, labels, convention })
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn labels(&self) -> &[Vec<i64>] {
        &self.labels
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn label_sum(&self) -> i64 {
        self.labels.iter().flatten().fold(0, |acc, &l| add(acc, l))
    }

    /// Labels of the parts of size n in ν^k, weakly decreasing.
    pub fn label_block(&self, k: i64, n: i64) -> Vec<i64> {
        let mut out = Vec::new();
        if k >= 1 && (k as usize) <= self.labels.len() {
            let nu = &self.config.nus[(k - 1) as usize];
            for (s, &part) in nu.parts().iter().enumerate() {
                if part == n {
                    out.push(self.labels[(k - 1) as usize][s]);
                }
            }
        }
        out
    }
}

impl fmt::Display for RiggedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "convention: {}", self.convention.name())?;
        if self.config.nus.is_empty() {
            return write!(f, "(empty configuration)");
        }
        for (k0, nu) in self.config.nus.iter().enumerate() {
            write!(f, "nu^{}:", k0 + 1)?;
            if nu.is_empty() {
                write!(f, " -")?;
            }
            for (s, &part) in nu.parts().iter().enumerate() {
                write!(f, " {}|{}", part, self.labels[k0][s])?;
            }
            if k0 + 1 < self.config.nus.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl Serialize for RiggedConfiguration {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RiggedConfiguration", 3)?;
        let nu: Vec<&[i64]> = self.config.nus.iter().map(|p| p.parts()).collect();
        s.serialize_field("nu", &nu)?;
        s.serialize_field("labels", &self.labels)?;
        s.serialize_field("convention", &self.convention)?;
        s.end()
    }
}

/// The serialized skeleton of a rigged configuration; the type (λ;R) travels
/// separately.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RiggedConfigData {
    pub nu: Vec<Vec<i64>>,
    pub labels: Vec<Vec<i64>>,
    pub convention: Convention,
}

impl RiggedConfigData {
    pub fn into_rigged(
        self,
        lambda: Partition,
        rects: RectangleSequence,
    ) -> Result<RiggedConfiguration> {
        let nus = self
            .nu
            .into_iter()
            .map(Partition::try_new)
            .collect::<Result<Vec<_>>>()?;
        let config = Configuration::new(lambda, rects, nus)?;
        RiggedConfiguration::new(config, self.labels, self.convention)
    }
}

/// All riggings of an admissible configuration, coquantum convention,
/// deterministic order.
pub fn enumerate_riggings(config: &Configuration) -> Result<Vec<RiggedConfiguration>> {
    if !config.is_admissible(AdmissibleMode::Support) {
        return Err(Error::Precondition("configuration is not admissible".into()));
    }
    // per partition, per maximal equal-size run: weakly decreasing tuples
    let mut block_choices: Vec<Vec<Vec<i64>>> = Vec::new();
    let mut block_slots: Vec<(usize, usize, usize)> = Vec::new(); // (k0, start, end)
    for (k0, nu) in config.nus.iter().enumerate() {
        let mut s = 0;
        while s < nu.len() {
            let size = nu.parts()[s];
            let mut e = s;
            while e < nu.len() && nu.parts()[e] == size {
                e += 1;
            }
            let bound = config.vacancy(k0 as i64 + 1, size);
            block_choices.push(decreasing_tuples(e - s, bound));
            block_slots.push((k0, s, e));
            s = e;
        }
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; block_choices.len()];
    loop {
        let mut labels: Vec<Vec<i64>> =
            config.nus.iter().map(|nu| vec![0; nu.len()]).collect();
        for (b, &(k0, s, e)) in block_slots.iter().enumerate() {
            labels[k0][s..e].copy_from_slice(&block_choices[b][choice[b]]);
        }
        out.push(RiggedConfiguration::new(config.clone(), labels, Convention::Coquantum)?);
        let mut i = block_choices.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < block_choices[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Weakly decreasing tuples of the given length with entries in [0, bound].
fn decreasing_tuples(len: usize, bound: i64) -> Vec<Vec<i64>> {
    fn rec(len: usize, max: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if acc.len() == len {
            out.push(acc.clone());
            return;
        }
        for v in (0..=max).rev() {
            acc.push(v);
            rec(len, v, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, bound, &mut Vec::new(), &mut out);
    out
}

/// cocharge of a rigged configuration (coquantum labels).
pub fn cocharge_rc(rc: &RiggedConfiguration) -> Result<i64> {
    if rc.convention != Convention::Coquantum {
        return Err(Error::Convention { expected: "coquantum", got: rc.convention.name() });
    }
    Ok(add(rc.config.cocharge(), rc.label_sum()))
}

/// charge of a rigged configuration (quantum labels).
pub fn charge_rc(rc: &RiggedConfiguration) -> Result<i64> {
    if rc.convention != Convention::Quantum {
        return Err(Error::Convention { expected: "quantum", got: rc.convention.name() });
    }
    Ok(add(rc.config.charge(), rc.label_sum()))
}

/// Ω: complement every label against its vacancy number and toggle the
/// convention.
pub fn omega_complement(rc: &RiggedConfiguration) -> RiggedConfiguration {
    let mut labels = rc.labels.clone();
    for (k0, nu) in rc.config.nus.iter().enumerate() {
        for (s, &part) in nu.parts().iter().enumerate() {
            labels[k0][s] = rc.config.vacancy(k0 as i64 + 1, part) - labels[k0][s];
        }
    }
    let convention = match rc.convention {
        Convention::Coquantum => Convention::Quantum,
        Convention::Quantum => Convention::Coquantum,
    };
    RiggedConfiguration::new(rc.config.clone(), labels, convention)
        .expect("complement stays within bounds")
}

/// Which formula produces the RC polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcRoute {
    /// Σ q^{cocharge} over explicit riggings.
    Enumerate,
    /// Σ_ν q^{cocharge(ν)} Π [P+m, m]_q.
    Fermionic,
}

/// RC_{λ;R}(q), the cocharge generating function of RC(λ;R).
pub fn rc_polynomial(
    lambda: &Partition,
    rects: &RectangleSequence,
    route: RcRoute,
) -> Result<QPolynomial> {
    let mut poly = QPolynomial::zero();
    for config in enumerate_configurations(lambda, rects) {
        match route {
            RcRoute::Enumerate => {
                for rigging in enumerate_riggings(&config)? {
                    poly.add_term(cocharge_rc(&rigging)?, 1);
                }
            }
            RcRoute::Fermionic => {
                let mut product = QPolynomial::one();
                let depth = config.depth_bound();
                let width = config.width_bound();
                for k in 1..=depth {
                    for n in 1..=width {
                        let m = config.m_multiplicity(k, n);
                        if m > 0 {
                            product =
                                product.times(&q_binomial(config.vacancy(k, n) + m, m));
                        }
                    }
                }
                poly = poly.plus(&product.shift(config.cocharge()));
            }
        }
    }
    Ok(poly)
}

/// Charge generating function Σ q^{charge} over RC(λ;R) (quantum labels).
pub fn rc_charge_polynomial(lambda: &Partition, rects: &RectangleSequence) -> Result<QPolynomial> {
    let mut poly = QPolynomial::zero();
    for config in enumerate_configurations(lambda, rects) {
        for rigging in enumerate_riggings(&config)? {
            poly.add_term(charge_rc(&omega_complement(&rigging))?, 1);
        }
    }
    Ok(poly)
}

// ---------------------------------------------------------------------------
// The m-matrix and the RC transpose
// ---------------------------------------------------------------------------

/// Difference matrix m_{i,j} = α_{i-1,j} - α_{i,j} over a finite box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MMatrix {
    entries: Vec<Vec<i64>>,
}

impl MMatrix {
    pub fn entry(&self, i: i64, j: i64) -> i64 {
        if i >= 1 && j >= 1 {
            *self
                .entries
                .get((i - 1) as usize)
                .and_then(|row| row.get((j - 1) as usize))
                .unwrap_or(&0)
        } else {
            0
        }
    }

    pub fn rows(&self) -> i64 {
        self.entries.len() as i64
    }

    pub fn cols(&self) -> i64 {
        self.entries.first().map_or(0, |r| r.len() as i64)
    }

    pub fn row_sum(&self, i: i64) -> i64 {
        (1..=self.cols()).map(|j| self.entry(i, j)).sum()
    }

    pub fn col_sum(&self, j: i64) -> i64 {
        (1..=self.rows()).map(|i| self.entry(i, j)).sum()
    }
}

/// The m-matrix of a configuration.
pub fn m_matrix(config: &Configuration) -> MMatrix {
    let depth = config.depth_bound();
    let width = config.width_bound();
    let entries = (1..=depth)
        .map(|i| (1..=width).map(|j| config.alpha(i - 1, j) - config.alpha(i, j)).collect())
        .collect();
    MMatrix { entries }
}

/// Reconstruct the configuration from its m-matrix.
pub fn from_m_matrix(
    m: &MMatrix,
    lambda: Partition,
    rects: RectangleSequence,
) -> Result<Configuration> {
    let mut nus = Vec::new();
    for i in 1..=m.rows() {
        // α_{i,j} = -Σ_{k<=i} m_{k,j}: column sizes of ν^i
        let mut alphas = Vec::new();
        for j in 1..=m.cols() {
            let a: i64 = -(1..=i).map(|k| m.entry(k, j)).sum::<i64>();
            if a < 0 {
                return Err(Error::Format(format!("negative column size at ({i},{j})")));
            }
            alphas.push(a);
        }
        if alphas.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Format(format!("columns of ν^{i} not weakly decreasing")));
        }
        let height = alphas.first().copied().unwrap_or(0);
        let parts: Vec<i64> = (1..=height)
            .map(|s| alphas.iter().filter(|&&a| a >= s).count() as i64)
            .collect();
        nus.push(Partition::new(parts));
    }
    Configuration::new(lambda, rects, nus)
}

fn theta(x: i64) -> i64 {
    if x >= 0 {
        1
    } else {
        0
    }
}

/// The RC-transpose: RC(λ;R) → RC(λ^t;R^t), coquantum labels,
/// complementing cocharge against n(R).
pub fn rc_transpose(rc: &RiggedConfiguration) -> Result<RiggedConfiguration> {
    if rc.convention != Convention::Coquantum {
        return Err(Error::Convention { expected: "coquantum", got: rc.convention.name() });
    }
    let config = &rc.config;
    let lambda = &config.lambda;
    let rects = &config.rects;
    let m = m_matrix(config);
    let t_lambda = lambda.transpose();
    let t_rects = rects.transpose();
    // box for the transposed matrix
    let depth = (t_lambda.len() as i64)
        .max(t_rects.rects().iter().map(|r| r.rows).max().unwrap_or(0))
        .max(m.cols())
        + 1;
    let width = m.rows().max(t_lambda.part(1)).max(
        t_rects.rects().iter().map(|r| r.cols).max().unwrap_or(0),
    ) + 1;
    let entries: Vec<Vec<i64>> = (1..=depth)
        .map(|i| {
            (1..=width)
                .map(|j| {
                    -m.entry(j, i) + theta(lambda.part(j as usize) - i)
                        - rects.r_count(j, i)
                })
                .collect()
        })
        .collect();
    let hat = MMatrix { entries };
    let hat_config = from_m_matrix(&hat, t_lambda, t_rects)?;
    // labels: ρ_{n,k}(hat) = transpose of the complement of ρ_{k,n} in the
    // m_n(ν^k) x P_{k,n}(ν) box
    let mut labels: Vec<Vec<i64>> =
        hat_config.nus().iter().map(|nu| vec![0; nu.len()]).collect();
    for (a0, nu_hat) in hat_config.nus().iter().enumerate() {
        let a = a0 as i64 + 1; // partition index in the image
        let mut s = 0;
        while s < nu_hat.len() {
            let b = nu_hat.parts()[s]; // part size in the image
            let mut e = s;
            while e < nu_hat.len() && nu_hat.parts()[e] == b {
                e += 1;
            }
            let rows = (e - s) as i64; // m_b(hat ν^a)
            // source block: parts of size a in ν^b
            let src_m = config.m_multiplicity(b, a);
            let src_p = config.vacancy(b, a);
            let rho = rc.label_block(b, a);
            if src_m > 0 && rows != src_p {
                return Err(Error::InternalConsistency(format!(
                    "transpose block ({a},{b}): {rows} rows vs vacancy {src_p}"
                )));
            }
            // complement inside src_m x src_p, then transpose
            let complement: Vec<i64> =
                (0..src_m).map(|i| src_p - rho[(src_m - 1 - i) as usize]).collect();
            let transposed: Vec<i64> = (1..=src_p)
                .map(|h| complement.iter().filter(|&&c| c >= h).count() as i64)
                .collect();
            for (offset, slot) in (s..e).enumerate() {
                let value = transposed.get(offset).copied().unwrap_or(0);
                labels[a0][slot] = value;
            }
            s = e;
        }
    }
    RiggedConfiguration::new(hat_config, labels, Convention::Coquantum)
}

/// Duality on rigged configurations over a transposed type: reverse the
/// first k-1 labelled partitions.
pub fn rc_duality(rc: &RiggedConfiguration, k: i64) -> Result<RiggedConfiguration> {
    let config = &rc.config;
    let heights = config.rects.rects().iter().map(|r| r.rows).max().unwrap_or(0);
    if k < config.lambda.len() as i64 || k < heights || config.nus.len() as i64 >= k {
        return Err(Error::Range(format!(
            "k = {k} too small for λ of length {} with heights up to {heights}",
            config.lambda.len()
        )));
    }
    // base pair: λ = (input λ)^t over n' letters, R = input rects transposed
    let base_lambda = config.lambda.transpose();
    let n_letters: i64 = config.rects.rects().iter().map(|r| r.cols).sum();
    // dual base data in the k-box
    let padded = base_lambda.padded(n_letters as usize);
    let dual_lambda =
        Partition::new(padded.iter().rev().map(|&p| k - p).collect::<Vec<_>>());
    let dual_rects = RectangleSequence::new(
        config
            .rects
            .rects()
            .iter()
            .map(|r| Rect::new(k - r.rows, r.cols))
            .collect(),
    );
    let out_lambda = dual_lambda.transpose();
    let mut nus: Vec<Partition> = Vec::new();
    let mut labels: Vec<Vec<i64>> = Vec::new();
    for p in 1..k {
        let src = k - p;
        nus.push(config.nu(src));
        labels.push(if src as usize <= rc.labels.len() && src >= 1 {
            rc.labels[(src - 1) as usize].clone()
        } else {
            Vec::new()
        });
    }
    while nus.last().is_some_and(|p| p.is_empty()) {
        nus.pop();
        labels.pop();
    }
    let out_config = Configuration::new(out_lambda, out_rects_check(dual_rects)?, nus)?;
    RiggedConfiguration::new(out_config, labels, rc.convention)
}

fn out_rects_check(rects: RectangleSequence) -> Result<RectangleSequence> {
    if rects.rects().iter().any(|r| r.rows < 1 || r.cols < 1) {
        return Err(Error::Range("duality box produced a degenerate rectangle".into()));
    }
    Ok(rects)
}

/// ζ: charge-preserving embedding RC(λ;R) → RC(λ;rows(R)), quantum labels;
/// new rows are labelled 0.
pub fn zeta_embed(rc: &RiggedConfiguration) -> Result<RiggedConfiguration> {
    if rc.convention != Convention::Quantum {
        return Err(Error::Convention { expected: "quantum", got: rc.convention.name() });
    }
    let config = &rc.config;
    let rows_rects = config.rects.rows();
    let depth = config
        .rects
        .rects()
        .iter()
        .map(|r| r.rows - 1)
        .max()
        .unwrap_or(0)
        .max(config.nus.len() as i64);
    let mut nus = Vec::new();
    let mut labels = Vec::new();
    for k in 1..=depth {
        let mut rows: Vec<(i64, i64)> = Vec::new(); // (part, label)
        let nu = config.nu(k);
        for (s, &part) in nu.parts().iter().enumerate() {
            rows.push((part, rc.labels[(k - 1) as usize][s]));
        }
        for r in config.rects.rects() {
            for _ in 0..(r.rows - k).max(0) {
                rows.push((r.cols, 0));
            }
        }
        rows.sort_unstable_by(|a, b| b.cmp(a));
        nus.push(Partition::new(rows.iter().map(|&(p, _)| p).collect()));
        labels.push(rows.iter().map(|&(_, l)| l).collect());
    }
    let out_config = Configuration::new(config.lambda.clone(), rows_rects, nus)?;
    RiggedConfiguration::new(out_config, labels, Convention::Quantum)
}

/// The rectangle family ((2)^{r-k}, (1,1)^k, (1)^{n-2r}).
pub fn fishel_rects(n: i64, r: i64, k: i64) -> Result<RectangleSequence> {
    if k > r || 2 * r > n || k < 0 || r < 0 || n < 1 {
        return Err(Error::Range(format!("fishel parameters n={n}, r={r}, k={k}")));
    }
    let mut rects = Vec::new();
    rects.extend(std::iter::repeat(Rect::new(1, 2)).take((r - k) as usize));
    rects.extend(std::iter::repeat(Rect::new(2, 1)).take(k as usize));
    rects.extend(std::iter::repeat(Rect::new(1, 1)).take((n - 2 * r) as usize));
    Ok(RectangleSequence::new(rects))
}

/// Charge generating function over RC(λ; ((2)^{r-k},(1,1)^k,(1)^{n-2r})).
pub fn fishel_m_poly(lambda: &Partition, n: i64, r: i64, k: i64) -> Result<QPolynomial> {
    let rects = fishel_rects(n, r, k)?;
    if lambda.size() != n {
        return Ok(QPolynomial::zero());
    }
    rc_charge_polynomial(lambda, &rects)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running_rects() -> RectangleSequence {
        RectangleSequence::new(vec![Rect::new(2, 3), Rect::new(4, 2), Rect::new(3, 1)])
    }

    fn running_lambda() -> Partition {
        Partition::new(vec![5, 4, 3, 2, 2, 1])
    }

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn running_nu() -> Configuration {
        Configuration::new(
            running_lambda(),
            running_rects(),
            vec![p(&[1]), p(&[2, 1]), p(&[2, 1]), p(&[2, 1]), p(&[1])],
        )
        .unwrap()
    }

    #[test]
    fn vacancy_table_matches_paper() {
        let nu = running_nu();
        let expected = [
            [0, 1, 1],
            [0, 0, 1],
            [1, 1, 1],
            [0, 0, 0],
            [0, 1, 1],
            [1, 1, 1],
            [0, 0, 0],
        ];
        for (k0, row) in expected.iter().enumerate() {
            for (n0, &v) in row.iter().enumerate() {
                assert_eq!(
                    nu.vacancy(k0 as i64 + 1, n0 as i64 + 1),
                    v,
                    "P_{{{},{}}}",
                    k0 + 1,
                    n0 + 1
                );
            }
        }
        assert_eq!(nu.vacancy(3, 0), 0);
    }

    #[test]
    fn admissibility_and_enumeration() {
        let nu = running_nu();
        for mode in [AdmissibleMode::Direct, AdmissibleMode::Support, AdmissibleMode::Strengthened]
        {
            assert!(nu.is_admissible(mode));
        }
        let configs = enumerate_configurations(&running_lambda(), &running_rects());
        assert_eq!(configs, vec![running_nu()]);
        // the empty type
        let empty = enumerate_configurations(&Partition::empty(), &RectangleSequence::empty());
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_admissible(AdmissibleMode::Direct));
        // single rectangle forces the all-empty configuration
        let single = RectangleSequence::new(vec![Rect::new(2, 3)]);
        let configs = enumerate_configurations(&p(&[3, 3]), &single);
        assert_eq!(configs.len(), 1);
        assert!(configs[0].nus().is_empty());
        // size mismatch
        assert!(enumerate_configurations(&p(&[2]), &single).is_empty());
    }

    #[test]
    fn cocharge_of_running_configuration() {
        assert_eq!(running_nu().cocharge(), 3);
        let empty = Configuration::new(Partition::empty(), RectangleSequence::empty(), vec![])
            .unwrap();
        assert_eq!(empty.cocharge(), 0);
    }

    #[test]
    fn cocharge_via_m_matrix_identity() {
        // cocharge(ν) = Σ C(m_{k,n}, 2) summed with multiplicity 1/2 m^2 form
        for config in [running_nu()] {
            let m = m_matrix(&config);
            let mut half_square_sum = 0;
            for i in 1..=m.rows() {
                for j in 1..=m.cols() {
                    half_square_sum += m.entry(i, j) * m.entry(i, j);
                }
            }
            assert_eq!(config.cocharge(), half_square_sum / 2);
        }
    }

    #[test]
    fn riggings_of_running_example() {
        let nu = running_nu();
        let riggings = enumerate_riggings(&nu).unwrap();
        assert_eq!(riggings.len(), 4);
        // L_max: replace each part by its maximal label
        let max_rig = riggings
            .iter()
            .max_by_key(|r| r.label_sum())
            .unwrap();
        assert_eq!(
            max_rig.labels(),
            &[vec![0], vec![0, 0], vec![1, 1], vec![0, 0], vec![0]]
        );
        let mut cocharges: Vec<i64> =
            riggings.iter().map(|r| cocharge_rc(r).unwrap()).collect();
        cocharges.sort_unstable();
        assert_eq!(cocharges, vec![3, 4, 4, 5]);
    }

    #[test]
    fn rc_polynomial_routes_agree() {
        let expected = QPolynomial::from_coeffs(&[(3, 1), (4, 2), (5, 1)]);
        let enumerated =
            rc_polynomial(&running_lambda(), &running_rects(), RcRoute::Enumerate).unwrap();
        let fermionic =
            rc_polynomial(&running_lambda(), &running_rects(), RcRoute::Fermionic).unwrap();
        assert_eq!(enumerated, expected);
        assert_eq!(fermionic, expected);
        assert_eq!(enumerated.eval(1), 4);
    }

    #[test]
    fn transposed_type_polynomial() {
        // RC(λ^t; R^t) carries the mirror polynomial
        let expected = QPolynomial::from_coeffs(&[(4, 1), (5, 2), (6, 1)]);
        let poly = rc_polynomial(
            &running_lambda().transpose(),
            &running_rects().transpose(),
            RcRoute::Enumerate,
        )
        .unwrap();
        assert_eq!(poly, expected);
    }

    #[test]
    fn charge_and_omega() {
        let riggings = enumerate_riggings(&running_nu()).unwrap();
        let n_r = running_rects().n_stat();
        let mut charges = Vec::new();
        for rigging in &riggings {
            let omega = omega_complement(rigging);
            assert_eq!(omega_complement(&omega), *rigging);
            let charge = charge_rc(&omega).unwrap();
            let cocharge = cocharge_rc(rigging).unwrap();
            assert_eq!(charge + cocharge, n_r);
            charges.push(charge);
        }
        charges.sort_unstable();
        assert_eq!(charges, vec![4, 5, 5, 6]);
        // wrong convention is refused
        assert!(charge_rc(&riggings[0]).is_err());
        assert!(cocharge_rc(&omega_complement(&riggings[0])).is_err());
    }

    #[test]
    fn m_matrix_round_trip() {
        let nu = running_nu();
        let m = m_matrix(&nu);
        for j in 1..=m.cols() {
            assert_eq!(m.col_sum(j), 0, "column {j}");
        }
        for i in 1..=m.rows() {
            let expected = nu.lambda().part(i as usize)
                - nu.rects()
                    .rects()
                    .iter()
                    .filter(|r| r.rows >= i)
                    .map(|r| r.cols)
                    .sum::<i64>();
            assert_eq!(m.row_sum(i), expected, "row {i}");
        }
        let back = from_m_matrix(&m, running_lambda(), running_rects()).unwrap();
        assert_eq!(back, nu);
    }

    #[test]
    fn rc_transpose_involution_and_statistic() {
        let riggings = enumerate_riggings(&running_nu()).unwrap();
        let n_r = running_rects().n_stat();
        for rigging in &riggings {
            let image = rc_transpose(rigging).unwrap();
            assert_eq!(image.config().lambda(), &running_lambda().transpose());
            assert_eq!(
                cocharge_rc(rigging).unwrap() + cocharge_rc(&image).unwrap(),
                n_r
            );
            let back = rc_transpose(&image).unwrap();
            assert_eq!(&back, rigging);
        }
    }

    #[test]
    fn rc_duality_on_transposed_running_example() {
        // configurations of type (λ^t; R^t), k = 5
        let configs = enumerate_configurations(
            &running_lambda().transpose(),
            &running_rects().transpose(),
        );
        assert_eq!(configs.len(), 1);
        assert_eq!(
            configs[0].nus(),
            &[p(&[3]), p(&[3, 1]), p(&[2, 1]), p(&[1])]
        );
        for rigging in enumerate_riggings(&configs[0]).unwrap() {
            let image = rc_duality(&rigging, 5).unwrap();
            assert_eq!(cocharge_rc(&rigging).unwrap(), cocharge_rc(&image).unwrap());
            // vacancy symmetry P_{i,j}(ν) = P_{k-i,j}(ν̃)
            for i in 1..5 {
                for j in 1..=4 {
                    assert_eq!(
                        rigging.config().vacancy(i, j),
                        image.config().vacancy(5 - i, j),
                        "({i},{j})"
                    );
                }
            }
            let back = rc_duality(&image, 5).unwrap();
            assert_eq!(back, rigging);
        }
    }

    #[test]
    fn zeta_preserves_charge() {
        let riggings = enumerate_riggings(&running_nu()).unwrap();
        let mut images = Vec::new();
        for rigging in &riggings {
            let quantum = omega_complement(rigging);
            let image = zeta_embed(&quantum).unwrap();
            assert_eq!(charge_rc(&image).unwrap(), charge_rc(&quantum).unwrap());
            images.push(image);
        }
        for (i, a) in images.iter().enumerate() {
            for b in images.iter().skip(i + 1) {
                assert_ne!(a, b, "ζ not injective");
            }
        }
        // identity when R is already single rows
        let rows = running_rects().rows();
        for config in enumerate_configurations(&running_lambda(), &rows) {
            for rigging in enumerate_riggings(&config).unwrap() {
                let quantum = omega_complement(&rigging);
                assert_eq!(zeta_embed(&quantum).unwrap(), quantum);
            }
        }
    }

    #[test]
    fn fishel_edge_cases() {
        assert!(fishel_m_poly(&p(&[2, 1]), 3, 0, 0).is_ok());
        assert!(fishel_m_poly(&p(&[2, 2]), 4, 1, 2).is_err());
        assert!(fishel_m_poly(&p(&[1]), 4, 1, 1).unwrap().is_zero());
    }

    #[test]
    fn json_shape() {
        let riggings = enumerate_riggings(&running_nu()).unwrap();
        let js = serde_json::to_value(&riggings[0]).unwrap();
        assert_eq!(js["convention"], "coquantum");
        assert_eq!(js["nu"][1], serde_json::json!([2, 1]));
        let data: RiggedConfigData = serde_json::from_value(js).unwrap();
        let back = data.into_rigged(running_lambda(), running_rects()).unwrap();
        assert_eq!(back, riggings[0]);
    }
}
