//! Command-line requests. Every field is normalized after parsing so that the
//! echoed request reparses to itself.

use clap::{Args, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use whittaker::rootdata::build_algebra;
use whittaker::{AlgebraKind, RootSystem, Weight, WhittakerCharacter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScopeArg {
    Even,
    #[default]
    Full,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct Query {
    /// `gl,m,n`, `osp,n`, `pe,n`, optionally `even:` in front.
    #[arg(long)]
    pub algebra: String,
    /// Comma-separated rationals, e.g. `0,1/2,-1`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// `i:v,...` with 1-based even simple roots; `0` is the zero character.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub zeta: String,
    /// Exit with status 2 when the answer is unsupported.
    #[arg(long)]
    #[serde(default)]
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct MultArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub query: Query,
    /// Only `[M̃(λ,ζ) : L̃(μ,ζ)]` instead of the whole series.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct KlArgs {
    /// Weyl group type: `A3`, `B2`, `C3`.
    #[arg(long, conflicts_with_all = ["algebra", "lambda"])]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[arg(long, requires = "w")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[arg(long, requires = "x")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<String>,
    /// With `--lambda`: the decomposition matrix of the block of λ.
    #[arg(long, requires = "lambda")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "algebra")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    #[serde(default)]
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct WhvecArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub query: Query,
    #[arg(long, value_enum, default_value_t)]
    #[serde(default)]
    pub scope: ScopeArg,
    /// Largest `h̄`-degree searched.
    #[arg(long, default_value_t = whittaker::uea::DEFAULT_DEGREE_BOUND)]
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct VerifyArgs {
    /// Criteria to run, e.g. `1,5`; all by default.
    #[arg(long, default_value = "1,2,3,4,5,6,7,8,9,10")]
    pub criteria: String,
    /// Run the grids without the thread pool.
    #[arg(long)]
    #[serde(default)]
    pub sequential: bool,
    /// List every gl(1|2) grid cell with both engines' answers.
    #[arg(long)]
    #[serde(default)]
    pub cells: bool,
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Request {
    /// The W_ζ dot-orbit of λ.
    Orbit(Query),
    /// Whether λ is typical.
    Typical(Query),
    /// Whether the standard Whittaker module is simple.
    Simple(Query),
    /// Composition multiplicities of the standard Whittaker module.
    Mult(MultArgs),
    /// Kazhdan–Lusztig polynomials, tables and decomposition matrices.
    Kl(KlArgs),
    /// A basis of Whittaker vectors in the explicit gl(1|2) or pe(2) model.
    Whvec(WhvecArgs),
    /// Run the acceptance checks.
    Verify(VerifyArgs),
}

/// A parse failure naming the offending field.
#[derive(Debug)]
pub struct FieldError(pub String);

impl std::fmt::Display for FieldError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn field<T>(name: &str, r: whittaker::Result<T>) -> Result<T, FieldError> {
    r.map_err(|e| FieldError(format!("invalid --{name}: {e}")))
}

pub fn algebra_form(k: &AlgebraKind) -> String {
    match k {
        AlgebraKind::Gl { m, n } => format!("gl,{m},{n}"),
        AlgebraKind::Osp { n } => format!("osp,{n}"),
        AlgebraKind::Pe { n } => format!("pe,{n}"),
        AlgebraKind::Even { of } => format!("even:{}", algebra_form(of)),
    }
}

fn weight_form(w: &Weight) -> String {
    w.to_strings().join(",")
}

/// Parsed inputs of a [`Query`].
pub struct Parsed {
    pub rs: RootSystem,
    pub lambda: Weight,
    pub zeta: WhittakerCharacter,
}

pub fn parse_algebra(s: &str) -> Result<RootSystem, FieldError> {
    let kind = field("algebra", AlgebraKind::parse(s))?;
    field("algebra", build_algebra(&kind))
}

pub fn parse_weight(rs: &RootSystem, name: &str, s: &str) -> Result<Weight, FieldError> {
    let w = field(name, Weight::parse(s))?;
    field(name, rs.check_weight(&w))?;
    Ok(w)
}

impl Query {
    pub fn parse(&self) -> Result<Parsed, FieldError> {
        let rs = parse_algebra(&self.algebra)?;
        let lambda = parse_weight(&rs, "lambda", &self.lambda)?;
        let zeta = field("zeta", WhittakerCharacter::parse(&rs, &self.zeta))?;
        Ok(Parsed { rs, lambda, zeta })
    }

    fn normalize(&mut self) -> Result<(), FieldError> {
        let p = self.parse()?;
        self.algebra = algebra_form(&p.rs.algebra);
        self.lambda = weight_form(&p.lambda);
        self.zeta = p.zeta.to_string();
        Ok(())
    }
}

fn parse_criteria(s: &str) -> Result<Vec<u8>, FieldError> {
    let ids: Vec<u8> = s
        .split(',')
        .map(|t| t.trim().parse::<u8>().ok().filter(|i| (1..=10).contains(i)))
        .collect::<Option<_>>()
        .ok_or_else(|| FieldError(format!("invalid --criteria: {s:?} is not a list of 1..10")))?;
    Ok(ids)
}

impl VerifyArgs {
    pub fn ids(&self) -> Result<Vec<u8>, FieldError> {
        parse_criteria(&self.criteria)
    }
}

impl Request {
    /// Checks every field and rewrites it in canonical form.
    pub fn normalize(&mut self) -> Result<(), FieldError> {
        match self {
            Request::Orbit(q) | Request::Typical(q) | Request::Simple(q) => q.normalize(),
            Request::Mult(m) => {
                m.query.normalize()?;
                if let Some(mu) = &m.mu {
                    let rs = parse_algebra(&m.query.algebra)?;
                    m.mu = Some(weight_form(&parse_weight(&rs, "mu", mu)?));
                }
                Ok(())
            }
            Request::Whvec(w) => w.query.normalize(),
            Request::Kl(k) => {
                if let Some(g) = &k.group {
                    field("group", whittaker::WeylSubgroup::parse_type(g))?;
                    k.group = Some(g.trim().to_ascii_uppercase());
                } else if k.algebra.is_none() {
                    return Err(FieldError("kl needs --group or --algebra with --lambda".into()));
                }
                if let (Some(a), Some(l)) = (&k.algebra, &k.lambda) {
                    let rs = parse_algebra(a)?;
                    k.lambda = Some(weight_form(&parse_weight(&rs, "lambda", l)?));
                    k.algebra = Some(algebra_form(&rs.algebra));
                }
                Ok(())
            }
            Request::Verify(v) => {
                let ids = v.ids()?;
                v.criteria = ids.iter().map(u8::to_string).collect::<Vec<_>>().join(",");
                Ok(())
            }
        }
    }

    pub fn strict(&self) -> bool {
        match self {
            Request::Orbit(q) | Request::Typical(q) | Request::Simple(q) => q.strict,
            Request::Mult(m) => m.query.strict,
            Request::Whvec(w) => w.query.strict,
            Request::Kl(_) | Request::Verify(_) => false,
        }
    }
}
