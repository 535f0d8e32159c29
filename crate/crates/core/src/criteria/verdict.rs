//! Verdicts and reports.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of evaluating one condition.
///
/// Statements about infinitely many primes are never `Established` by a
/// computation; a census can only make them `EmpiricallySupported`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Established { witnesses: Vec<String> },
    Refuted { counterexample: String },
    EmpiricallySupported {
        prime_bound: u64,
        witness_count: usize,
        witnesses: Vec<u64>,
    },
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn established(w: impl Into<String>) -> Self {
        Verdict::Established {
            witnesses: vec![w.into()],
        }
    }

    pub fn refuted(c: impl Into<String>) -> Self {
        Verdict::Refuted {
            counterexample: c.into(),
        }
    }

    pub fn inconclusive(r: impl Into<String>) -> Self {
        Verdict::Inconclusive { reason: r.into() }
    }

    pub fn empirical(prime_bound: u64, witnesses: Vec<u64>) -> Self {
        Verdict::EmpiricallySupported {
            prime_bound,
            witness_count: witnesses.len(),
            witnesses,
        }
    }

    /// Exactly established.
    pub fn is_established(&self) -> bool {
        matches!(self, Verdict::Established { .. })
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Verdict::Inconclusive { .. })
    }

    pub fn is_empirical(&self) -> bool {
        matches!(self, Verdict::EmpiricallySupported { .. })
    }

    /// Established or empirically supported.
    pub fn holds(&self) -> bool {
        self.is_established() || self.is_empirical()
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Established { .. } => "established",
            Verdict::Refuted { .. } => "refuted",
            Verdict::EmpiricallySupported { .. } => "empirically_supported",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }

    /// CLI exit code: 0 established or supported, 2 refuted, 3 inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Established { .. } | Verdict::EmpiricallySupported { .. } => 0,
            Verdict::Refuted { .. } => 2,
            Verdict::Inconclusive { .. } => 3,
        }
    }

    /// Conjunction. A refutation wins, then an inconclusive part, then an
    /// empirical part.
    pub fn all<'a>(items: impl IntoIterator<Item = &'a Verdict>) -> Verdict {
        let items: Vec<&Verdict> = items.into_iter().collect();
        if let Some(v) = items.iter().find(|v| v.is_refuted()) {
            return (*v).clone();
        }
        if let Some(v) = items.iter().find(|v| v.is_inconclusive()) {
            return (*v).clone();
        }
        if let Some(v) = items.iter().find(|v| v.is_empirical()) {
            return (*v).clone();
        }
        Verdict::Established {
            witnesses: items
                .iter()
                .flat_map(|v| match v {
                    Verdict::Established { witnesses } => witnesses.clone(),
                    _ => vec![],
                })
                .collect(),
        }
    }

    /// Disjunction. An exact proof wins, then empirical support, then an
    /// inconclusive part; refuted only if every alternative is.
    pub fn any<'a>(items: impl IntoIterator<Item = &'a Verdict>) -> Verdict {
        let items: Vec<&Verdict> = items.into_iter().collect();
        for pred in [Verdict::is_established, Verdict::is_empirical, Verdict::is_inconclusive] {
            if let Some(v) = items.iter().find(|v| pred(v)) {
                return (*v).clone();
            }
        }
        if items.is_empty() {
            return Verdict::refuted("no alternative applies");
        }
        Verdict::refuted(
            items
                .iter()
                .map(|v| match v {
                    Verdict::Refuted { counterexample } => counterexample.as_str(),
                    _ => "",
                })
                .collect::<Vec<_>>()
                .join("; "),
        )
    }

    /// Exact boolean outcome.
    pub fn from_bool(ok: bool, yes: impl Into<String>, no: impl Into<String>) -> Verdict {
        if ok {
            Verdict::established(yes)
        } else {
            Verdict::refuted(no)
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Established { witnesses } if witnesses.is_empty() => write!(f, "Established"),
            Verdict::Established { witnesses } => write!(f, "Established ({})", witnesses.join("; ")),
            Verdict::Refuted { counterexample } => write!(f, "Refuted ({counterexample})"),
            Verdict::EmpiricallySupported {
                prime_bound,
                witness_count,
                witnesses,
            } => {
                let shown: Vec<String> = witnesses.iter().take(8).map(u64::to_string).collect();
                let more = if *witness_count > shown.len() { ", ..." } else { "" };
                write!(
                    f,
                    "EmpiricallySupported ({witness_count} witness primes up to {prime_bound}: {}{more})",
                    shown.join(", ")
                )
            }
            Verdict::Inconclusive { reason } => write!(f, "Inconclusive ({reason})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// Sub-verdicts, the overall verdict and a readable trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: String,
    pub conditions: Vec<Condition>,
    pub verdict: Verdict,
    pub trace: Vec<String>,
}

impl CriterionReport {
    pub fn new(id: impl Into<String>) -> Self {
        CriterionReport {
            id: id.into(),
            conditions: Vec::new(),
            verdict: Verdict::inconclusive("not evaluated"),
            trace: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, verdict: Verdict) -> &Verdict {
        self.conditions.push(Condition {
            name: name.into(),
            verdict,
        });
        &self.conditions.last().expect("just pushed").verdict
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.trace.push(line.into());
    }

    pub fn condition(&self, name: &str) -> Option<&Verdict> {
        self.conditions.iter().find(|c| c.name == name).map(|c| &c.verdict)
    }

    /// Overall verdict = conjunction of the sub-verdicts.
    pub fn conclude_all(mut self) -> Self {
        self.verdict = Verdict::all(self.conditions.iter().map(|c| &c.verdict));
        self
    }

    /// Overall verdict = disjunction of the sub-verdicts.
    pub fn conclude_any(mut self) -> Self {
        self.verdict = Verdict::any(self.conditions.iter().map(|c| &c.verdict));
        self
    }

    /// For a sufficient criterion: a failed hypothesis leaves the conclusion
    /// open rather than refuting it.
    pub fn sufficient(mut self) -> Self {
        if let Verdict::Refuted { counterexample } = &self.verdict {
            self.verdict = Verdict::inconclusive(format!("the criterion does not apply: {counterexample}"));
        }
        self
    }

    pub fn with_verdict(mut self, v: Verdict) -> Self {
        self.verdict = v;
        self
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.id, self.verdict);
        for c in &self.conditions {
            out.push_str(&format!("  {}: {}\n", c.name, c.verdict));
        }
        for t in &self.trace {
            out.push_str(&format!("  - {t}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinators() {
        let e = Verdict::established("x");
        let r = Verdict::refuted("y");
        let i = Verdict::inconclusive("z");
        let s = Verdict::empirical(100, vec![3, 7]);
        assert!(Verdict::all([&e, &s]).is_empirical());
        assert!(Verdict::all([&e, &s, &i]).is_inconclusive());
        assert!(Verdict::all([&i, &r]).is_refuted());
        assert!(Verdict::all([&e, &e]).is_established());
        assert!(Verdict::any([&r, &s]).is_empirical());
        assert!(Verdict::any([&r, &i]).is_inconclusive());
        assert!(Verdict::any([&r, &r]).is_refuted());
        assert!(Verdict::any([&s, &e]).is_established());
        assert!(Verdict::any(std::iter::empty()).is_refuted());
        assert_eq!(e.exit_code(), 0);
        assert_eq!(s.exit_code(), 0);
        assert_eq!(r.exit_code(), 2);
        assert_eq!(i.exit_code(), 3);
    }

    #[test]
    fn json_shape() {
        let mut rep = CriterionReport::new("ic2");
        rep.push("(IC2-1)", Verdict::established("t_1"));
        rep.push("(IC2-2)", Verdict::empirical(10, vec![3]));
        let rep = rep.conclude_all();
        let js = serde_json::to_value(&rep).unwrap();
        assert_eq!(js["verdict"]["verdict"], "empirically_supported");
        assert_eq!(js["conditions"][0]["name"], "(IC2-1)");
        assert_eq!(js["conditions"][0]["verdict"], "established");
        let back: CriterionReport = serde_json::from_value(js).unwrap();
        assert_eq!(back, rep);
        assert!(rep.to_text().contains("(IC2-1): Established"));
    }
}
