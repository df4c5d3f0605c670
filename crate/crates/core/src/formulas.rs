//! Closed-form sparing numbers for standard families and their sieves.
//!
//! Each result carries a status. `ProvenElementary` formulas have short
//! complete arguments and are expected to agree with the exact solver on
//! every instance. `Hypothesis` formulas are the published closed forms for
//! sieves of paths and cycles, encoded as written; their case conditions
//! are ambiguous in places, so every admissible reading is returned as a
//! separate candidate and the harness compares them with the solver.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{is_bipartite, longest_path_length};
use crate::sparing::sparing_number;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FormulaStatus {
    #[serde(rename = "PROVEN-ELEMENTARY")]
    ProvenElementary,
    #[serde(rename = "HYPOTHESIS")]
    Hypothesis,
}

impl FormulaStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            FormulaStatus::ProvenElementary => "PROVEN-ELEMENTARY",
            FormulaStatus::Hypothesis => "HYPOTHESIS",
        }
    }
}

/// One admissible value with the case that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub value: usize,
    pub case: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub source: &'static str,
    pub status: FormulaStatus,
    /// Empty exactly when the formula does not apply.
    pub candidates: Vec<Candidate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl FormulaResult {
    fn single(source: &'static str, status: FormulaStatus, value: usize, case: &str) -> Self {
        FormulaResult {
            source,
            status,
            candidates: vec![Candidate {
                value,
                case: case.to_string(),
            }],
            diagnostic: None,
        }
    }

    fn not_applicable(source: &'static str, status: FormulaStatus, why: String) -> Self {
        FormulaResult {
            source,
            status,
            candidates: Vec::new(),
            diagnostic: Some(why),
        }
    }

    pub fn is_applicable(&self) -> bool {
        !self.candidates.is_empty()
    }

    pub fn values(&self) -> Vec<usize> {
        self.candidates.iter().map(|c| c.value).collect()
    }

    /// First candidate, if any.
    pub fn value(&self) -> Option<usize> {
        self.candidates.first().map(|c| c.value)
    }

    pub fn admits(&self, value: usize) -> bool {
        self.candidates.iter().any(|c| c.value == value)
    }
}

use FormulaStatus::{Hypothesis, ProvenElementary};

/// Cycles: 1 when odd, 0 when even.
pub fn phi_cycle(n: usize) -> Result<FormulaResult> {
    if n < 3 {
        return Err(Error::domain(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(FormulaResult::single(
        "cycle",
        ProvenElementary,
        n % 2,
        if n % 2 == 1 { "odd" } else { "even" },
    ))
}

/// Complete graphs: `(n - 1)(n - 2) / 2`.
pub fn phi_complete(n: usize) -> Result<FormulaResult> {
    if n == 0 {
        return Err(Error::domain("complete graph needs n >= 1"));
    }
    let v = if n < 2 { 0 } else { (n - 1) * (n - 2) / 2 };
    Ok(FormulaResult::single(
        "complete",
        ProvenElementary,
        v,
        "(n-1)(n-2)/2",
    ))
}

/// Bipartite graphs: 0. The caller vouches for bipartiteness.
pub fn phi_bipartite() -> FormulaResult {
    FormulaResult::single("bipartite", ProvenElementary, 0, "bipartite")
}

/// Odd-k sieves of bipartite graphs stay bipartite (pairs at odd distance
/// lie in opposite colour classes), hence 0.
pub fn phi_odd_sieve_of_bipartite(g: &Graph, k: usize) -> FormulaResult {
    const SOURCE: &str = "odd-sieve-of-bipartite";
    if k.is_multiple_of(2) {
        return FormulaResult::not_applicable(SOURCE, ProvenElementary, format!("k = {k} is even"));
    }
    if !is_bipartite(g) {
        return FormulaResult::not_applicable(
            SOURCE,
            ProvenElementary,
            "base graph is not bipartite".into(),
        );
    }
    FormulaResult::single(SOURCE, ProvenElementary, 0, "odd k, bipartite base")
}

/// How the even-k path-sieve cases pick their parameters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PathDecomposition {
    /// `(l·k + r)·k + s = n` with non-negative `l, r, s`; every solution
    /// meeting one of the three case conditions is a candidate.
    #[default]
    AsStated,
    /// `n = r·k + s` with `0 <= s < k`, as in the labeling argument, plus
    /// its `n <= 2k` special case.
    Constructive,
}

/// Sparing number of the k-sieve of the path of length `n`.
pub fn phi_path_sieve(n: usize, k: usize, mode: PathDecomposition) -> Result<FormulaResult> {
    const SOURCE: &str = "path-sieve";
    if k < 3 || k > n {
        return Err(Error::domain(format!(
            "path sieve needs 3 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    if k % 2 == 1 {
        return Ok(FormulaResult::single(SOURCE, Hypothesis, 0, "odd k"));
    }
    if k == n {
        // The sieve is the cycle on n + 1 vertices, which is odd here.
        return Ok(FormulaResult::single(
            SOURCE,
            Hypothesis,
            1,
            "k=n, sieve is C_{n+1}",
        ));
    }
    let mut candidates = Vec::new();
    match mode {
        PathDecomposition::AsStated => {
            let mut l = 0;
            while l * k * k <= n {
                let mut r = 0;
                while (l * k + r) * k <= n {
                    let m = l * k + r;
                    let s = n - m * k;
                    if let Some((value, case)) = path_case(m, r, s) {
                        candidates.push(Candidate {
                            value,
                            case: format!("{case} (l={l}, r={r}, s={s})"),
                        });
                    }
                    r += 1;
                }
                l += 1;
            }
        }
        PathDecomposition::Constructive => {
            if n <= 2 * k {
                candidates.push(Candidate {
                    value: 1,
                    case: "n<=2k".into(),
                });
            } else {
                let (r, s) = (n / k, n % k);
                if let Some((value, case)) = path_case(r, r, s) {
                    candidates.push(Candidate {
                        value,
                        case: format!("{case} (r={r}, s={s})"),
                    });
                }
            }
        }
    }
    if candidates.is_empty() {
        return Ok(FormulaResult::not_applicable(
            SOURCE,
            Hypothesis,
            format!("no decomposition of n = {n} with k = {k} meets a case condition"),
        ));
    }
    Ok(FormulaResult {
        source: SOURCE,
        status: Hypothesis,
        candidates,
        diagnostic: None,
    })
}

/// The three even-k cases, with `m` the multiplier of `k`.
fn path_case(m: usize, r: usize, s: usize) -> Option<(usize, &'static str)> {
    if r >= 2 && s + 2 <= r {
        Some(((2 * m).checked_sub(3)?, "s<=r-2"))
    } else if r >= 1 && s + 1 == r {
        Some(((2 * m).checked_sub(2)?, "s=r-1"))
    } else if s == r {
        Some(((2 * m).checked_sub(1)?, "s=r"))
    } else {
        None
    }
}

/// Sieves of cycles with odd `k`: 0 for even cycles, `k + 1` for odd ones.
pub fn phi_cycle_sieve_odd_k(n: usize, k: usize) -> Result<FormulaResult> {
    const SOURCE: &str = "cycle-sieve-odd-k";
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::domain(format!("expected odd k >= 3, got {k}")));
    }
    if n < 3 {
        return Err(Error::domain(format!("cycle needs n >= 3, got {n}")));
    }
    if n < 2 * k + 1 {
        return Ok(FormulaResult::not_applicable(
            SOURCE,
            Hypothesis,
            format!("needs n >= 2k + 1 = {}, got {n}", 2 * k + 1),
        ));
    }
    Ok(if n.is_multiple_of(2) {
        FormulaResult::single(SOURCE, Hypothesis, 0, "even cycle")
    } else {
        FormulaResult::single(SOURCE, Hypothesis, k + 1, "odd cycle")
    })
}

/// Sieves of cycles with even `k >= 4`. All matching cases are returned.
pub fn phi_cycle_sieve_even_k(n: usize, k: usize) -> Result<FormulaResult> {
    const SOURCE: &str = "cycle-sieve-even-k";
    if k < 4 || k % 2 == 1 {
        return Err(Error::domain(format!("expected even k >= 4, got {k}")));
    }
    if n < 3 {
        return Err(Error::domain(format!("cycle needs n >= 3, got {n}")));
    }
    if n < 2 * k {
        return Ok(FormulaResult::not_applicable(
            SOURCE,
            Hypothesis,
            format!("needs n >= 2k = {}, got {n}", 2 * k),
        ));
    }
    let mut candidates = Vec::new();
    if n == 2 * k {
        candidates.push(Candidate {
            value: 3,
            case: "n=2k".into(),
        });
    }
    let mut l = 2;
    while l * k <= n {
        let r = n - l * k;
        if r < l {
            let inner = ((l - 1) * k + r) as i64 - 1;
            let value = 2 * (n as i64 - 2 * inner.div_euclid(2));
            candidates.push(Candidate {
                value: value as usize,
                case: format!("n=lk+r (l={l}, r={r})"),
            });
        }
        l += 1;
    }
    if n.is_multiple_of(k + 1) && n / (k + 1) >= 2 {
        let l = n / (k + 1);
        candidates.push(Candidate {
            value: 2 * l,
            case: format!("n=l(k+1) (l={l})"),
        });
    }
    if candidates.is_empty() {
        return Ok(FormulaResult::not_applicable(
            SOURCE,
            Hypothesis,
            format!("n = {n} matches none of n=2k, n=lk+r (r<l), n=l(k+1) for k = {k}"),
        ));
    }
    Ok(FormulaResult {
        source: SOURCE,
        status: Hypothesis,
        candidates,
        diagnostic: None,
    })
}

/// When `k` exceeds the longest path of `g` the sieve adds nothing, so its
/// sparing number is that of `g`, computed by the exact solver.
pub fn phi_sieve_trivial(g: &Graph, k: usize, budget: u64) -> Result<FormulaResult> {
    const SOURCE: &str = "sieve-beyond-longest-path";
    let l = longest_path_length(g)?;
    if k <= l {
        return Ok(FormulaResult::not_applicable(
            SOURCE,
            ProvenElementary,
            format!("k = {k} does not exceed the longest path length {l}"),
        ));
    }
    let solved = sparing_number(g, budget)?;
    if !solved.is_optimal() {
        return Ok(FormulaResult::not_applicable(
            SOURCE,
            ProvenElementary,
            "solver budget exhausted on the base graph".into(),
        ));
    }
    Ok(FormulaResult::single(
        SOURCE,
        ProvenElementary,
        solved.phi,
        "k > longest path",
    ))
}
