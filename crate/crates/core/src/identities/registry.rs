use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    RamanujanI321,
    CorrectedI310,
    Entry23I312,
    EtaI318,
    Pfd,
    SitaI38,
    SitaI39,
    LerchI321star,
    CothSum,
    CotSum4n3,
    ThmHh210,
    ThmH26,
    CorM216,
    Glaisher,
    Schlomilch220,
    Schlomilch221,
    FalseEntry21,
}

impl IdentityId {
    pub const ALL: [IdentityId; 17] = [
        IdentityId::RamanujanI321,
        IdentityId::CorrectedI310,
        IdentityId::Entry23I312,
        IdentityId::EtaI318,
        IdentityId::Pfd,
        IdentityId::SitaI38,
        IdentityId::SitaI39,
        IdentityId::LerchI321star,
        IdentityId::CothSum,
        IdentityId::CotSum4n3,
        IdentityId::ThmHh210,
        IdentityId::ThmH26,
        IdentityId::CorM216,
        IdentityId::Glaisher,
        IdentityId::Schlomilch220,
        IdentityId::Schlomilch221,
        IdentityId::FalseEntry21,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::RamanujanI321 => "ramanujan_i321",
            IdentityId::CorrectedI310 => "corrected_i310",
            IdentityId::Entry23I312 => "entry23_i312",
            IdentityId::EtaI318 => "eta_i318",
            IdentityId::Pfd => "pfd",
            IdentityId::SitaI38 => "sita_i38",
            IdentityId::SitaI39 => "sita_i39",
            IdentityId::LerchI321star => "lerch_i321star",
            IdentityId::CothSum => "coth_sum",
            IdentityId::CotSum4n3 => "cot_sum_4n3",
            IdentityId::ThmHh210 => "thm_hh_210",
            IdentityId::ThmH26 => "thm_h_26",
            IdentityId::CorM216 => "cor_m_216",
            IdentityId::Glaisher => "glaisher",
            IdentityId::Schlomilch220 => "schlomilch_220",
            IdentityId::Schlomilch221 => "schlomilch_221",
            IdentityId::FalseEntry21 => "false_entry21",
        }
    }

    pub fn spec(&self) -> &'static IdentitySpec {
        REGISTRY.iter().find(|s| s.id == *self).expect("every id is registered")
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == key)
            .ok_or_else(|| Error::Validation(format!("unknown identity id '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub domain: &'static str,
    pub default: &'static str,
}

const fn p(name: &'static str, domain: &'static str, default: &'static str) -> ParamSpec {
    ParamSpec { name, domain, default }
}

const ALPHA: ParamSpec = p("alpha", "real > 0, alpha*beta = pi^2", "pi");
const BETA: ParamSpec = p("beta", "real > 0, defaults to pi^2/alpha", "pi^2/alpha");
const W: ParamSpec = p("w", "real > 0, away from m^2*beta and cot poles", "1/3");
const X: ParamSpec = p("x", "real > 0, not an integer", "0.3");
const Y: ParamSpec = p("y", "real > 0", "0.7");

#[derive(Debug, Clone, Serialize)]
pub struct IdentitySpec {
    pub id: IdentityId,
    /// Short descriptive tag.
    pub tag: &'static str,
    pub summary: &'static str,
    pub params: &'static [ParamSpec],
}

impl IdentitySpec {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id.as_str(),
            "tag": self.tag,
            "summary": self.summary,
            "params": self.params,
        })
    }
}

pub static REGISTRY: [IdentitySpec; 17] = [
    IdentitySpec {
        id: IdentityId::RamanujanI321,
        tag: "ramanujan-odd-zeta",
        summary: "a^-n (zeta(2n+1)/2 + S_a) - (-b)^-n (zeta(2n+1)/2 + S_b) = 2^2n sum (-1)^(k-1) B_2k B_2n+2-2k a^(n+1-k) b^k / ...",
        params: &[ALPHA, BETA, p("n", "integer >= 1", "1")],
    },
    IdentitySpec {
        id: IdentityId::CorrectedI310,
        tag: "cot-coth-expansion-corrected",
        summary: "(pi/2) cot(sqrt(wa)) coth(sqrt(wb)) = 1/(2w) + log(b/a)/2 + sum {m a coth(m a)/(w + m^2 a) + m b coth(m b)/(w - m^2 b)}",
        params: &[ALPHA, BETA, W],
    },
    IdentitySpec {
        id: IdentityId::Entry23I312,
        tag: "weight-one-lambert-pair",
        summary: "a sum m/(e^2ma - 1) + b sum m/(e^2mb - 1) = (a + b)/24 - 1/4",
        params: &[ALPHA, BETA],
    },
    IdentitySpec {
        id: IdentityId::EtaI318,
        tag: "dedekind-eta-log-transformation",
        summary: "sum 1/(m(e^2ma - 1)) - sum 1/(m(e^2mb - 1)) = log(a/b)/4 - (a - b)/12",
        params: &[ALPHA, BETA],
    },
    IdentitySpec {
        id: IdentityId::Pfd,
        tag: "cot-coth-paired-expansion",
        summary: "pi^2 xy cot(pi x) coth(pi y) = 1 + 2 pi xy sum {n coth(pi n x/y)/(n^2 + y^2) - n coth(pi n y/x)/(n^2 - x^2)}",
        params: &[X, Y],
    },
    IdentitySpec {
        id: IdentityId::SitaI38,
        tag: "cot-coth-cubic-denominators",
        summary: "pi^2 xy cot(pi x) coth(pi y) = 1 + pi^2 (y^2 - x^2)/3 - 2 pi xy sum {y^2 coth(pi m x/y)/(m(m^2 + y^2)) + x^2 coth(pi m y/x)/(m(m^2 - x^2))}",
        params: &[X, Y],
    },
    IdentitySpec {
        id: IdentityId::SitaI39,
        tag: "cot-coth-split-expansion",
        summary: "pi^2 xy cot(pi x) coth(pi y) = 1 + pi^2 (y^2 - x^2)/3 + 2 pi xy (paired sum) - 4 pi xy sum (1/m)(1/(e^(2 pi m x/y) - 1) - 1/(e^(2 pi m y/x) - 1))",
        params: &[X, Y],
    },
    IdentitySpec {
        id: IdentityId::LerchI321star,
        tag: "lerch-zeta-4n+3",
        summary: "zeta(4n+3) = 2^(4n+2) pi^(4n+3) sum (-1)^(k+1) B_2k B_4n+4-2k / ... - 2 sum k^-(4n+3)/(e^2 pi k - 1)",
        params: &[p("n", "integer >= 0", "0")],
    },
    IdentitySpec {
        id: IdentityId::CothSum,
        tag: "hyperbolic-cotangent-sum",
        summary: "a^-n sum coth(a m)/m^(2n+1) = (-b)^-n sum coth(b m)/m^(2n+1) - 2^(2n+1) sum (-1)^k B_2k B_2n+2-2k a^(n+1-k) b^k / ...",
        params: &[ALPHA, BETA, p("n", "integer >= 1", "1")],
    },
    IdentitySpec {
        id: IdentityId::CotSum4n3,
        tag: "hyperbolic-cotangent-sum-at-pi",
        summary: "sum coth(pi m)/m^(4n+3) = 2^(4n+2) pi^(4n+3) sum (-1)^(k+1) B_2k B_4n+4-2k / ...",
        params: &[p("n", "integer >= 0", "0")],
    },
    IdentitySpec {
        id: IdentityId::ThmHh210,
        tag: "eisenstein-transformation-zero-characteristics",
        summary: "z^m (1 + (-1)^m) F_m+1(-1/z) = (1 + (-1)^m) F_m+1(z) + g(z,-m) + (2 pi i)^(m+1) sum B_k(1) B_m+2-k (-z)^(k-1) / (k! (m+2-k)!)",
        params: &[p("z", "complex, Im z and Im(-1/z) >= 1e-3", "i"), p("m", "integer", "2")],
    },
    IdentitySpec {
        id: IdentityId::ThmH26,
        tag: "generalized-eisenstein-transformation",
        summary: "(cz + d)^m H(Vz,-m,r1,r2) = H(z,-m,R1,R2) + g + (2 pi i)^(m+1) h",
        params: &[
            p("z", "complex, Im z and Im(Vz) >= 1e-3", "0.5i"),
            p("m", "integer", "3"),
            p("r1", "rational", "1/3"),
            p("r2", "rational", "1/5"),
            p("matrix", "a,b,c,d with ad - bc = 1, c > 0", "1,0,1,1"),
        ],
    },
    IdentitySpec {
        id: IdentityId::CorM216,
        tag: "odd-power-lambert-transformation",
        summary: "a^n sum k^(2n-1)/(e^2ak - 1) - (-b)^n sum k^(2n-1)/(e^2bk - 1) = (a^n - (-b)^n) B_2n/(4n)",
        params: &[ALPHA, BETA, p("n", "integer >= 2", "2")],
    },
    IdentitySpec {
        id: IdentityId::Glaisher,
        tag: "glaisher-sum",
        summary: "sum k^(4n+1)/(e^2 pi k - 1) = B_4n+2/(4(2n+1))",
        params: &[p("n", "integer >= 1", "1")],
    },
    IdentitySpec {
        id: IdentityId::Schlomilch220,
        tag: "weight-one-lambert-pair-corollary",
        summary: "a sum k/(e^2ak - 1) + b sum k/(e^2bk - 1) = (a + b)/24 - 1/4",
        params: &[ALPHA, BETA],
    },
    IdentitySpec {
        id: IdentityId::Schlomilch221,
        tag: "weight-one-lambert-at-pi",
        summary: "sum k/(e^2 pi k - 1) = 1/24 - 1/(8 pi)",
        params: &[],
    },
    IdentitySpec {
        id: IdentityId::FalseEntry21,
        tag: "cot-coth-expansion-as-stated",
        summary: "1/(2w) + sum {m a coth(m a)/(w + m^2 a) + m b coth(m b)/(w - m^2 b)} = (pi/2) cot(sqrt(wa)) coth(sqrt(wb)); false, off by log(b/a)/2",
        params: &[ALPHA, BETA, W],
    },
];

pub fn registry() -> &'static [IdentitySpec] {
    &REGISTRY
}
