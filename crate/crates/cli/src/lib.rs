//! Command implementations and output rendering for the sixfold binary.
//!
//! Exit-code contract: 0 success, 1 verification mismatch (or a failed
//! fixture check), 2 usage error.

pub mod bench;
pub mod paper;
pub mod report;
pub mod verify;

pub use bench::{render_bench, run_bench, BenchReport};
pub use paper::{
    errata_entries, render_errata_markdown, render_paper_check, run_paper_check, Check,
    ErrataEntry, PaperCheckReport,
};
pub use report::{
    build_count_report, build_terms_report, render_count, render_terms, CountReport, Format,
    LevelRow, LevelTallyRow, TermRow, TermsReport,
};
pub use verify::{compare, render_verify, run_verify, VerifyOutcome, VerifyRecord};

/// Exit code for a successful run.
pub const EXIT_OK: u8 = 0;
/// Exit code when verification or fixture checks found a mismatch.
pub const EXIT_MISMATCH: u8 = 1;
/// Exit code for usage errors (clap uses the same value for parse errors).
pub const EXIT_USAGE: u8 = 2;

/// Exit code the verify command must end with for a given outcome.
pub fn verify_exit_code(outcome: &VerifyOutcome) -> u8 {
    if outcome.all_match() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

/// Exit code the paper-check command must end with for a given report.
pub fn paper_check_exit_code(report: &PaperCheckReport) -> u8 {
    if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}
