use hom_embed::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error("{0}")]
    Math(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Math(_) => "math",
            CliError::Capacity(_) => "capacity",
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let mut msg = e.to_string();
        if let Error::Precondition { report, .. } = &e {
            if let Some(f) = report.failures.first() {
                let tuple: Vec<String> = f.tuple.iter().map(|i| (i + 1).to_string()).collect();
                msg.push_str(&format!(
                    " ({} violation(s); first: {} at ({}))",
                    report.failures.len(),
                    f.law,
                    tuple.join(",")
                ));
            }
        }
        match e {
            Error::Dimension(_) | Error::InvalidInput(_) | Error::InvalidParameter(_) => {
                CliError::Input(msg)
            }
            Error::Precondition { .. }
            | Error::NotRegular(_)
            | Error::NotFixed(_)
            | Error::NotCochain(_)
            | Error::NotCocycle(_)
            | Error::Inconsistent(_) => CliError::Math(msg),
        }
    }
}
