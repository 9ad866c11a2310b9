//! Named identities and the sweep engine that checks them exhaustively over
//! an index rectangle.
//!
//! Every comparison is exact. A failing sweep stops at the first
//! counterexample and records both sides in canonical text.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bell::{ATable, BellTable};
use crate::combinat::{delta, lah_signed, power, stirling1_signed, stirling2};
use crate::error::{Error, Result};
use crate::facpoly::FactorialPolynomials;
use crate::numfam::{self, WeightScheme};
use crate::series::Series;
use crate::{Poly, QSeries};

/// Random pairs `(f, g)` drawn for the Faà di Bruno sweep.
pub const FAA_DI_BRUNO_TRIALS: usize = 20;
/// Random invertible `g` drawn for the coefficient sweeps.
pub const COEFF_TRIALS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    AbInversion,
    StirlingInversion,
    LahSelfInverse,
    LahByStirling,
    Eq6Eq7Roundtrip,
    Prop31i,
    Prop31ii,
    PotentialOnes,
    BellOnes,
    AOnes,
    UpperAssocSpec,
    LowerAssocSpec,
    Psw1,
    Prop42,
    Prop44,
    Prf1,
    FaaDiBruno,
    BellCoeff,
    ACoeff,
    ClosingN1,
    ClosingN2,
    ClosingN3,
    /// The `n = 3` closing identity with the printed `k - 10` index; expected to fail.
    ClosingN3Literal,
}

/// What an identity compares, which decides its resource limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    Number,
    Polynomial,
    Series,
}

impl IdentityId {
    /// The default suite, in reporting order. Excludes [`IdentityId::ClosingN3Literal`].
    pub const DEFAULT: [IdentityId; 22] = [
        IdentityId::AbInversion,
        IdentityId::StirlingInversion,
        IdentityId::LahSelfInverse,
        IdentityId::LahByStirling,
        IdentityId::Eq6Eq7Roundtrip,
        IdentityId::Prop31i,
        IdentityId::Prop31ii,
        IdentityId::PotentialOnes,
        IdentityId::BellOnes,
        IdentityId::AOnes,
        IdentityId::UpperAssocSpec,
        IdentityId::LowerAssocSpec,
        IdentityId::Psw1,
        IdentityId::Prop42,
        IdentityId::Prop44,
        IdentityId::Prf1,
        IdentityId::FaaDiBruno,
        IdentityId::BellCoeff,
        IdentityId::ACoeff,
        IdentityId::ClosingN1,
        IdentityId::ClosingN2,
        IdentityId::ClosingN3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::AbInversion => "ab-inversion",
            IdentityId::StirlingInversion => "stirling-inversion",
            IdentityId::LahSelfInverse => "lah-self-inverse",
            IdentityId::LahByStirling => "lah-by-stirling",
            IdentityId::Eq6Eq7Roundtrip => "eq6-eq7-roundtrip",
            IdentityId::Prop31i => "prop31i",
            IdentityId::Prop31ii => "prop31ii",
            IdentityId::PotentialOnes => "potential-ones",
            IdentityId::BellOnes => "bell-ones",
            IdentityId::AOnes => "a-ones",
            IdentityId::UpperAssocSpec => "upper-assoc-spec",
            IdentityId::LowerAssocSpec => "lower-assoc-spec",
            IdentityId::Psw1 => "psw1",
            IdentityId::Prop42 => "prop42",
            IdentityId::Prop44 => "prop44",
            IdentityId::Prf1 => "prf1",
            IdentityId::FaaDiBruno => "faa-di-bruno",
            IdentityId::BellCoeff => "bell-coeff",
            IdentityId::ACoeff => "a-coeff",
            IdentityId::ClosingN1 => "closing-n1",
            IdentityId::ClosingN2 => "closing-n2",
            IdentityId::ClosingN3 => "closing-n3",
            IdentityId::ClosingN3Literal => "closing-n3-literal",
        }
    }

    pub fn kind(self) -> IdentityKind {
        use IdentityId::*;
        match self {
            AbInversion | Eq6Eq7Roundtrip | Prop31i | Prop31ii | PotentialOnes | BellOnes | AOnes | UpperAssocSpec
            | LowerAssocSpec => IdentityKind::Polynomial,
            FaaDiBruno | BellCoeff | ACoeff => IdentityKind::Series,
            StirlingInversion | LahSelfInverse | LahByStirling | Psw1 | Prop42 | Prop44 | Prf1 | ClosingN1
            | ClosingN2 | ClosingN3 | ClosingN3Literal => IdentityKind::Number,
        }
    }

    /// `(nmax, kmax)` used when none is given.
    pub fn default_range(self) -> (usize, usize) {
        use IdentityId::*;
        match self {
            AbInversion | PotentialOnes | BellOnes | AOnes => (10, 10),
            Eq6Eq7Roundtrip | Prop31i | Prop31ii | UpperAssocSpec | LowerAssocSpec => (8, 8),
            FaaDiBruno | BellCoeff | ACoeff => (8, 8),
            StirlingInversion | LahSelfInverse | LahByStirling => (30, 30),
            Psw1 | Prop42 | Prop44 => (20, 20),
            Prf1 => (25, 25),
            ClosingN1 | ClosingN2 | ClosingN3 | ClosingN3Literal => (20, 20),
        }
    }

    fn all_variants() -> impl Iterator<Item = IdentityId> {
        IdentityId::DEFAULT.into_iter().chain([IdentityId::ClosingN3Literal])
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::all_variants()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Largest admissible `max(nmax, kmax)` per identity kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub number: usize,
    pub polynomial: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            number: 30,
            polynomial: 10,
        }
    }
}

impl Limits {
    /// Limits under a global cap: the number limit becomes `cap`, the
    /// polynomial limit stays at 10 unless `cap` is lower.
    pub fn capped(cap: usize) -> Self {
        Limits {
            number: cap,
            polynomial: cap.min(10),
        }
    }

    fn for_kind(&self, kind: IdentityKind) -> usize {
        match kind {
            IdentityKind::Number => self.number,
            IdentityKind::Polynomial | IdentityKind::Series => self.polynomial,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: i64,
    pub k: Option<i64>,
    /// Which sub-check or random trial failed.
    pub context: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub nmax: usize,
    pub kmax: usize,
    pub passed: bool,
    /// Number of comparisons made.
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
    /// Wall time; not serialized, so reports stay byte-identical across runs.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl IdentityReport {
    /// One-line text rendering (without timing).
    pub fn to_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {} nmax={} kmax={} checked={}",
            self.identity, self.nmax, self.kmax, self.checked
        );
        if let Some(c) = &self.counterexample {
            line.push_str(&format!(" at n={}", c.n));
            if let Some(k) = c.k {
                line.push_str(&format!(" k={k}"));
            }
            line.push_str(&format!(" [{}]: lhs = {} ; rhs = {}", c.context, c.lhs, c.rhs));
        }
        line
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// Accumulates comparisons until the first mismatch.
struct Sweep {
    checked: usize,
    counterexample: Option<Counterexample>,
}

impl Sweep {
    fn new() -> Self {
        Sweep {
            checked: 0,
            counterexample: None,
        }
    }

    fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    /// Records one comparison; returns `false` once a mismatch has been seen.
    fn check<T: PartialEq + fmt::Display>(&mut self, n: i64, k: Option<i64>, context: &str, lhs: &T, rhs: &T) -> bool {
        if self.failed() {
            return false;
        }
        self.checked += 1;
        if lhs != rhs {
            self.counterexample = Some(Counterexample {
                n,
                k,
                context: context.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
            return false;
        }
        true
    }
}

/// Runs one identity under the default limits.
pub fn run_identity(id: IdentityId, nmax: usize, kmax: usize, seed: u64) -> Result<IdentityReport> {
    run_identity_with_limits(id, nmax, kmax, seed, &Limits::default())
}

pub fn run_identity_with_limits(
    id: IdentityId,
    nmax: usize,
    kmax: usize,
    seed: u64,
    limits: &Limits,
) -> Result<IdentityReport> {
    let limit = limits.for_kind(id.kind());
    if nmax.max(kmax) > limit {
        return Err(Error::LimitExceeded {
            identity: id.name().to_string(),
            nmax,
            kmax,
            limit,
        });
    }
    let start = Instant::now();
    let mut sweep = Sweep::new();
    run_checks(id, nmax, kmax, seed, &mut sweep)?;
    Ok(IdentityReport {
        identity: id,
        nmax,
        kmax,
        passed: !sweep.failed(),
        checked: sweep.checked,
        counterexample: sweep.counterexample,
        elapsed: start.elapsed(),
    })
}

/// Runs several identities at their default ranges, concurrently; the
/// returned reports follow the order of `ids`.
pub fn run_suite(ids: &[IdentityId], seed: u64, limits: &Limits) -> Result<Vec<IdentityReport>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = ids
            .iter()
            .map(|&id| {
                scope.spawn(move || {
                    let (nmax, kmax) = id.default_range();
                    run_identity_with_limits(id, nmax, kmax, seed, limits)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("identity worker panicked")).collect()
    })
}

fn triangle(nmin: usize, nmax: usize, kmin: usize, kmax: usize) -> impl Iterator<Item = (usize, usize)> {
    (nmin..=nmax).flat_map(move |n| (kmin..=n.min(kmax)).map(move |k| (n, k)))
}

fn rectangle(nmin: usize, nmax: usize, kmin: usize, kmax: usize) -> impl Iterator<Item = (usize, usize)> {
    (nmin..=nmax).flat_map(move |n| (kmin..=kmax).map(move |k| (n, k)))
}

fn poly_delta(n: usize, k: usize) -> Poly {
    if n == k {
        Poly::one()
    } else {
        Poly::zero()
    }
}

fn run_checks(id: IdentityId, nmax: usize, kmax: usize, seed: u64, sweep: &mut Sweep) -> Result<()> {
    use IdentityId::*;
    let at = |n: usize, k: usize| (n as i64, Some(k as i64));
    match id {
        AbInversion => {
            let bell = BellTable::new(nmax);
            let a = ATable::new(&bell)?;
            for (n, k) in triangle(1, nmax, 1, kmax) {
                let lhs: Poly = (k..=n).map(|j| a.at(n, j) * bell.at(j, k)).sum();
                let (n_, k_) = at(n, k);
                if !sweep.check(n_, k_, "sum_j A(n,j) B(j,k)", &lhs, &poly_delta(n, k)) {
                    break;
                }
            }
        }
        StirlingInversion => {
            for (n, k) in triangle(0, nmax, 0, kmax) {
                let lhs: BigInt = (k..=n).map(|j| stirling1_signed(n, j) * stirling2(j, k)).sum();
                let (n_, k_) = at(n, k);
                if !sweep.check(n_, k_, "sum_j s1(n,j) s2(j,k)", &lhs, &delta(n, k)) {
                    break;
                }
            }
        }
        LahSelfInverse => {
            for (n, k) in triangle(0, nmax, 0, kmax) {
                let lhs: BigInt = (k..=n).map(|j| lah_signed(n, j) * lah_signed(j, k)).sum();
                let (n_, k_) = at(n, k);
                if !sweep.check(n_, k_, "sum_j l(n,j) l(j,k)", &lhs, &delta(n, k)) {
                    break;
                }
            }
        }
        LahByStirling => {
            for (n, k) in triangle(0, nmax, 0, kmax) {
                let lhs: BigInt = (k..=n)
                    .map(|j| {
                        let s = stirling1_signed(n, j) * stirling2(j, k);
                        if j % 2 == 0 {
                            s
                        } else {
                            -s
                        }
                    })
                    .sum();
                let (n_, k_) = at(n, k);
                if !sweep.check(n_, k_, "sum_j (-1)^j s1(n,j) s2(j,k)", &lhs, &lah_signed(n, k)) {
                    break;
                }
            }
        }
        Eq6Eq7Roundtrip => {
            let fp = FactorialPolynomials::new(nmax);
            for (n, k) in triangle(0, nmax, 0, kmax) {
                let (n_, k_) = at(n, k);
                let lower = fp.lower_factorial_direct(n, k)?;
                let ok = sweep.check(n_, k_, "lower by derivatives = sum_r s1(k,r) P(n,r)", &lower, &fp.lower_from_potential(n, k)?)
                    && sweep.check(
                        n_,
                        k_,
                        "sum_r s2(k,r) lower(n,r) = P(n,k)",
                        &fp.potential_from_lower(n, k)?,
                        &fp.potential(n, k as i64)?,
                    )
                    && sweep.check(
                        n_,
                        k_,
                        "upper by derivatives = sum_r c(k,r) P(n,r)",
                        &fp.upper_factorial_by_derivatives(n, k)?,
                        &fp.upper_factorial_direct(n, k)?,
                    );
                if !ok {
                    break;
                }
            }
        }
        Prop31i => {
            let fp = FactorialPolynomials::new(nmax);
            for (n, k) in triangle(0, nmax, 0, kmax) {
                let (n_, k_) = at(n, k);
                if !sweep.check(
                    n_,
                    k_,
                    "sum_j (-1)^k l(k,j) lower(n,j) = upper(n,k)",
                    &fp.upper_from_lower(n, k)?,
                    &fp.upper_factorial_direct(n, k)?,
                ) {
                    break;
                }
            }
        }
        Prop31ii => {
            let fp = FactorialPolynomials::new(nmax);
            for (n, k) in triangle(0, nmax, 0, kmax) {
                let (n_, k_) = at(n, k);
                if !sweep.check(
                    n_,
                    k_,
                    "sum_j (-1)^j l(k,j) upper(n,j) = lower(n,k)",
                    &fp.lower_from_upper(n, k)?,
                    &fp.lower_factorial_direct(n, k)?,
                ) {
                    break;
                }
            }
        }
        PotentialOnes => {
            let fp = FactorialPolynomials::new(nmax);
            for (n, k) in triangle(0, nmax, 0, kmax) {
                let (n_, k_) = at(n, k);
                let lhs = fp.potential(n, k as i64)?.eval_all_ones();
                if !sweep.check(n_, k_, "P(n,k)(1,...,1) = k^n", &lhs, &power(k as i64, n)) {
                    break;
                }
            }
        }
        BellOnes => {
            let bell = BellTable::new(nmax);
            for (n, k) in triangle(0, nmax, 0, kmax) {
                let (n_, k_) = at(n, k);
                if !sweep.check(n_, k_, "B(n,k)(1,...,1) = s2(n,k)", &bell.at(n, k).eval_all_ones(), &stirling2(n, k)) {
                    break;
                }
            }
        }
        AOnes => {
            let a = ATable::new(&BellTable::new(nmax))?;
            for (n, k) in triangle(0, nmax, 0, kmax) {
                let (n_, k_) = at(n, k);
                if !sweep.check(n_, k_, "A(n,k)(1,...,1) = s1(n,k)", &a.at(n, k).eval_all_ones(), &stirling1_signed(n, k)) {
                    break;
                }
            }
        }
        UpperAssocSpec | LowerAssocSpec => {
            let fp = FactorialPolynomials::new(nmax);
            for (n, k) in triangle(1, nmax, 1, kmax) {
                let (n_, k_) = at(n, k);
                let ok = if id == UpperAssocSpec {
                    let lhs = fp.upper_factorial_direct(n, k)?.eval_all_ones();
                    sweep.check(n_, k_, "upper(n,k)(1,...,1) = sum_r c(k,r) r^n", &lhs, &numfam::upper_assoc(n, k)?)
                } else {
                    let lhs = fp.lower_factorial_direct(n, k)?.eval_all_ones();
                    sweep.check(n_, k_, "lower(n,k)(1,...,1) = sum_r s1(k,r) r^n", &lhs, &numfam::lower_assoc(n, k)?)
                };
                if !ok {
                    break;
                }
            }
        }
        Psw1 | Prop42 | Prop44 => {
            let (scheme, context) = match id {
                Psw1 => (WeightScheme::Ones, "1^n + ... + k^n = closed form"),
                Prop42 => (WeightScheme::Cycle, "upper family = closed form"),
                _ => (WeightScheme::Stirling1Signed, "lower family = closed form"),
            };
            for (n, k) in rectangle(1, nmax, 1, kmax) {
                let (n_, k_) = at(n, k);
                let direct = numfam::power_sum_direct(&scheme, n, k)?;
                let closed = match id {
                    Psw1 => numfam::psw1_rhs(n, k)?,
                    Prop42 => numfam::prop42_rhs(n, k)?,
                    _ => numfam::prop44_rhs(n, k)?,
                };
                let ok = sweep.check(n_, k_, "weighted power sum = reduction", &direct, &numfam::power_sum_reduce(&scheme, n, k)?)
                    && sweep.check(n_, k_, context, &direct, &closed);
                if !ok {
                    break;
                }
            }
        }
        Prf1 => {
            // outer index k in 1..=nmax, inner index j in 0..=min(k, kmax)
            'outer: for k in 1..=nmax {
                for j in 0..=k.min(kmax) {
                    let (n_, k_) = at(k, j);
                    if j < k && !sweep.check(n_, k_, "sum_{r>j} C(r,j) s1(k,r) = k s1(k-1,j)", &numfam::prf1_lhs(k, j)?, &numfam::prf1_rhs(k, j)?) {
                        break 'outer;
                    }
                    if j >= 1
                        && !sweep.check(
                            n_,
                            k_,
                            "sum_{r>=j} C(r,j) s1(k,r) = s1(k-1,j-1) + s1(k-1,j)",
                            &numfam::prf1_full_lhs(k, j),
                            &numfam::prf1_full_rhs(k, j)?,
                        )
                    {
                        break 'outer;
                    }
                }
            }
        }
        FaaDiBruno => {
            let bell = BellTable::new(nmax);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            'trials: for trial in 0..FAA_DI_BRUNO_TRIALS {
                let f = random_series(&mut rng, nmax, false, false);
                let g = random_series(&mut rng, nmax, true, false);
                for n in 0..=nmax {
                    let (lhs, rhs) = faa_di_bruno_sides(&f, &g, n, &bell)?;
                    if !sweep.check(n as i64, None, &format!("trial {trial}"), &lhs, &rhs) {
                        break 'trials;
                    }
                }
            }
        }
        BellCoeff | ACoeff => {
            let bell = BellTable::new(nmax);
            let a = ATable::new(&bell)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            'trials: for trial in 0..COEFF_TRIALS {
                let g = random_series(&mut rng, nmax, true, true);
                let inverse = g.invert_composition()?;
                let roundtrip = g.compose(&inverse)? == Series::identity(nmax) && inverse.compose(&g)? == Series::identity(nmax);
                let id_text = |ok: bool| if ok { "x" } else { "not x" };
                if !sweep.check(0, None, &format!("trial {trial}: g(ginv(x)) and ginv(g(x))"), &id_text(roundtrip), &id_text(true)) {
                    break;
                }
                for (n, k) in triangle(1, nmax, 1, kmax) {
                    let (lhs, rhs) = if id == BellCoeff {
                        bell_coeff_sides(&g, n, k, &bell)?
                    } else {
                        a_coeff_sides(&g, &inverse, n, k, &a)?
                    };
                    let (n_, k_) = at(n, k);
                    if !sweep.check(n_, k_, &format!("trial {trial}"), &lhs, &rhs) {
                        break 'trials;
                    }
                }
            }
        }
        ClosingN1 | ClosingN2 | ClosingN3 | ClosingN3Literal => {
            let n = match id {
                ClosingN1 => 1,
                ClosingN2 => 2,
                _ => 3,
            };
            let printed: Vec<BigInt> = numfam::PRINTED_CLOSING_COEFFS[n - 1].iter().map(|&v| BigInt::from(v)).collect();
            let derived = numfam::closing_identity_coeffs(n)?;
            if !sweep.check(n as i64, None, "coefficients from the lower-family closed form", &join(&derived), &join(&printed)) {
                return Ok(());
            }
            for k in 2..=kmax {
                let lhs = numfam::alternating_cycle_power_sum(n, k);
                let rhs = if id == ClosingN3Literal {
                    numfam::closing_rhs_literal_n3(k)
                } else {
                    numfam::closing_rhs(&printed, k)
                };
                if !sweep.check(n as i64, Some(k as i64), "sum_r (-1)^r c(k,r) r^n", &lhs, &rhs) {
                    break;
                }
            }
        }
    }
    Ok(())
}

fn join(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Random rational series of order `order`: numerators in `[-9, 9]`,
/// denominators in `[1, 9]`. `vanishing` forces a zero constant term;
/// `invertible` additionally forces a nonzero linear coefficient.
pub fn random_series(rng: &mut impl Rng, order: usize, vanishing: bool, invertible: bool) -> QSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    for i in 0..=order {
        let c = if i == 0 && vanishing {
            BigRational::from_integer(BigInt::from(0))
        } else {
            loop {
                let num: i64 = rng.gen_range(-9..=9);
                let den: i64 = rng.gen_range(1..=9);
                if num != 0 || !(invertible && i == 1) {
                    break BigRational::new(BigInt::from(num), BigInt::from(den));
                }
            }
        };
        coeffs.push(c);
    }
    Series::new(coeffs).expect("nonempty")
}

/// `X_j = g_j` (Taylor coefficients) for `1 <= j <= n`.
fn taylor_assignment(g: &QSeries, n: usize) -> Result<BTreeMap<usize, BigRational>> {
    (1..=n.min(g.order())).map(|j| Ok((j, g.taylor_coeff(j)?))).collect()
}

/// Both sides of the Faà di Bruno formula at order `n`, for `g(0) = 0`:
/// `D^n(f o g)(0)` and `sum_k f_k B(n,k)(g_1, ..., g_{n-k+1})`.
pub fn faa_di_bruno_sides(f: &QSeries, g: &QSeries, n: usize, bell: &BellTable) -> Result<(BigRational, BigRational)> {
    if n > f.order().min(g.order()) {
        return Err(Error::Series(format!("order {n} beyond the operands")));
    }
    let lhs = f.compose(g)?.taylor_coeff(n)?;
    let at = taylor_assignment(g, n)?;
    let mut rhs = BigRational::from_integer(BigInt::from(0));
    for k in 0..=n {
        rhs += f.taylor_coeff(k)? * bell.at(n, k).eval(&at)?;
    }
    Ok((lhs, rhs))
}

/// `B(n,k)(g_1, ...)` and `n! [x^n] g^k / k!`.
pub fn bell_coeff_sides(g: &QSeries, n: usize, k: usize, bell: &BellTable) -> Result<(BigRational, BigRational)> {
    let lhs = bell.at(n, k).eval(&taylor_assignment(g, n)?)?;
    let rhs = power_taylor(g, n, k)?;
    Ok((lhs, rhs))
}

/// `A(n,k)(g_1, ...)` and `n! [x^n] ginv^k / k!`.
pub fn a_coeff_sides(
    g: &QSeries,
    inverse: &QSeries,
    n: usize,
    k: usize,
    a: &ATable,
) -> Result<(BigRational, BigRational)> {
    let lhs = a.at(n, k).eval(&taylor_assignment(g, n)?)?;
    let rhs = power_taylor(inverse, n, k)?;
    Ok((lhs, rhs))
}

fn power_taylor(g: &QSeries, n: usize, k: usize) -> Result<BigRational> {
    let k_fact: BigRational = crate::scalar::factorial(k);
    Ok(g.pow(k).taylor_coeff(n)? / k_fact)
}

/// Faà di Bruno check for one pair at one order.
pub fn verify_faa_di_bruno(f: &QSeries, g: &QSeries, n: usize) -> Result<IdentityReport> {
    single_report(IdentityId::FaaDiBruno, n, 0, || {
        faa_di_bruno_sides(f, g, n, &BellTable::new(n))
    })
}

/// `B(n,k)` at the Taylor coefficients of `g` against `g^k/k!`.
pub fn verify_bell_coeff(g: &QSeries, n: usize, k: usize) -> Result<IdentityReport> {
    if k > n {
        return Err(Error::Index(format!("need k <= n, got ({n},{k})")));
    }
    single_report(IdentityId::BellCoeff, n, k, || bell_coeff_sides(g, n, k, &BellTable::new(n)))
}

/// `A(n,k)` at the Taylor coefficients of `g` against `ginv^k/k!`.
pub fn verify_a_coeff(g: &QSeries, n: usize, k: usize) -> Result<IdentityReport> {
    if k > n || n == 0 {
        return Err(Error::Index(format!("need 1 <= k <= n, got ({n},{k})")));
    }
    let inverse = g.invert_composition()?;
    single_report(IdentityId::ACoeff, n, k, || {
        a_coeff_sides(g, &inverse, n, k, &ATable::new(&BellTable::new(n))?)
    })
}

fn single_report(
    identity: IdentityId,
    n: usize,
    k: usize,
    sides: impl FnOnce() -> Result<(BigRational, BigRational)>,
) -> Result<IdentityReport> {
    let start = Instant::now();
    let (lhs, rhs) = sides()?;
    let mut sweep = Sweep::new();
    sweep.check(n as i64, Some(k as i64), "single", &lhs, &rhs);
    Ok(IdentityReport {
        identity,
        nmax: n,
        kmax: k,
        passed: !sweep.failed(),
        checked: sweep.checked,
        counterexample: sweep.counterexample,
        elapsed: start.elapsed(),
    })
}

/// Reports as a JSON array, without timings.
pub fn reports_to_json(reports: &[IdentityReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}
