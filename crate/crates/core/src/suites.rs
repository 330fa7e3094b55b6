//! Named verification suites and their parallel runner.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::report::{CaseRecord, SuiteReport};
use crate::{octonion, sigma, susy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Sigma,
    SusyRelations,
    MomentumInverse,
    Consistency,
    AngularMomentum,
    OctonionTable,
    ZornHomomorphism,
    OctIdentities,
    SpinDecomposition,
    QuaternionClosure,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Sigma,
        Suite::SusyRelations,
        Suite::MomentumInverse,
        Suite::Consistency,
        Suite::AngularMomentum,
        Suite::OctonionTable,
        Suite::ZornHomomorphism,
        Suite::OctIdentities,
        Suite::SpinDecomposition,
        Suite::QuaternionClosure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sigma => "sigma",
            Suite::SusyRelations => "susy-relations",
            Suite::MomentumInverse => "momentum-inverse",
            Suite::Consistency => "consistency",
            Suite::AngularMomentum => "angular-momentum",
            Suite::OctonionTable => "octonion-table",
            Suite::ZornHomomorphism => "zorn-homomorphism",
            Suite::OctIdentities => "oct-identities",
            Suite::SpinDecomposition => "spin-decomposition",
            Suite::QuaternionClosure => "quaternion-closure",
        }
    }

    fn cases(self) -> (Vec<CaseRecord>, Vec<String>) {
        let plain = |c: Vec<CaseRecord>| (c, Vec::new());
        match self {
            Suite::Sigma => plain(sigma::verify_sigma_contractions()),
            Suite::SusyRelations => plain(susy::verify_susy_relations()),
            Suite::MomentumInverse => plain(susy::verify_momentum_inverse()),
            Suite::Consistency => plain(susy::verify_translation_consistency()),
            Suite::AngularMomentum => plain(susy::verify_angular_momentum()),
            Suite::OctonionTable => plain(octonion::verify_table()),
            Suite::ZornHomomorphism => (octonion::verify_zorn_homomorphism(), octonion::zorn_homomorphism_notes()),
            Suite::OctIdentities => plain(octonion::verify_identities()),
            Suite::SpinDecomposition => octonion::verify_spin_decomposition(),
            Suite::QuaternionClosure => plain(octonion::verify_quaternion_closure()),
        }
    }

    pub fn run(self) -> SuiteReport {
        let start = Instant::now();
        let (cases, notes) = self.cases();
        let millis = start.elapsed().as_millis() as u64;
        SuiteReport::new(self.name(), cases, millis).with_notes(notes)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Runs each suite on its own thread; reports come back sorted by name.
/// Duplicates are run once.
pub fn run_suites(suites: &[Suite]) -> Vec<SuiteReport> {
    let mut unique = suites.to_vec();
    unique.sort();
    unique.dedup();
    let mut reports: Vec<SuiteReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = unique.iter().map(|&s| scope.spawn(move || s.run())).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}
