use std::str::FromStr;

use num_traits::ToPrimitive;
use oddsum::bitcore::{self, nat_to_rational};
use oddsum::{deviations, extremal, sums, Error, ExactRational, Nat, Result};

/// Largest `m` accepted by `lambda_m`.
const MAX_LAMBDA_M: u64 = 1 << 20;

/// Names accepted by `eval` and `table`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Function {
    Alpha,
    BigV,
    BigU,
    BigG,
    V,
    U,
    G,
    H,
    Theta,
    Hat,
    Tilde,
    LambdaM,
}

impl Function {
    pub const ALL: [Function; 12] = [
        Function::Alpha,
        Function::BigV,
        Function::BigU,
        Function::BigG,
        Function::V,
        Function::U,
        Function::G,
        Function::H,
        Function::Theta,
        Function::Hat,
        Function::Tilde,
        Function::LambdaM,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Function::Alpha => "alpha",
            Function::BigV => "V",
            Function::BigU => "U",
            Function::BigG => "G",
            Function::V => "v",
            Function::U => "u",
            Function::G => "g",
            Function::H => "h",
            Function::Theta => "theta",
            Function::Hat => "hat",
            Function::Tilde => "tilde",
            Function::LambdaM => "lambda_m",
        }
    }

    pub fn eval(self, n: &Nat) -> Result<ExactRational> {
        let nat = |r: Result<Nat>| r.map(|v| nat_to_rational(&v));
        match self {
            Function::Alpha => nat(sums::alpha(n)),
            Function::BigV => Ok(sums::v_fast(n)),
            Function::BigU => Ok(nat_to_rational(&sums::u_fast(n))),
            Function::BigG => Ok(sums::g_fast(n)),
            Function::V => Ok(deviations::dev_v(n)),
            Function::U => Ok(deviations::dev_u(n)),
            Function::G => Ok(deviations::dev_g(n)),
            Function::H => nat(deviations::h_eval(n)),
            Function::Theta => extremal::theta(n),
            Function::Hat => nat(bitcore::hat(n)),
            Function::Tilde => nat(bitcore::tilde(n)),
            Function::LambdaM => match n.to_u64() {
                Some(m) if m <= MAX_LAMBDA_M => Ok(extremal::lambda_m(m)),
                _ => Err(Error::Usage(format!(
                    "lambda_m takes m <= {MAX_LAMBDA_M}, got {n}"
                ))),
            },
        }
    }
}

impl FromStr for Function {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Function::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Function::ALL.iter().map(|f| f.name()).collect();
                Error::Usage(format!(
                    "unknown function {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Parses a comma-separated function list such as `U,V,G`.
pub fn parse_list(s: &str) -> Result<Vec<Function>> {
    s.split(',').map(str::parse).collect()
}
