//! Command-line front end for the `lieinv` binary.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{build_algebra, AlgebraSpec, Family, GeneratorSet};
use crate::cocycles::{cocycle_from_sym, omega5, omega7_su};
use crate::duality::check_duality;
use crate::error::{LieError, Result};
use crate::identities::{cayley_hamilton_check, trace_identity_suite};
use crate::invariants::{primitive_tensors, v_tensor};
use crate::io::{self, AnyTensor};
use crate::report::IdentityReport;
use crate::structure::{d_tensor, structure_constants};
use crate::suite::{named_tensor, tower_cocycle, verify_algebra, VerifyOptions};
use crate::tensor::AltTensor;
use crate::ttensor::{k_scalar, t_tensor};

#[derive(Parser, Debug)]
#[command(name = "lieinv", version, about = "Invariant tensors, cocycles and trace identities of the classical Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write f, d (or v) and the low cocycles as sparse listings
    Tables(Common),
    /// Run every check for one algebra; exits nonzero if any fails
    Verify(Common),
    /// Print the primitive cocycle of the given order
    Cocycle(Common),
    /// Print the t-tensor of the given order and its scalar K
    Ttensor(Common),
    /// Check the duality relations of the cocycle tower
    Dual(Common),
    /// Trace identities (su(n), 3 <= n <= 6) and the partition identities
    Identities(Common),
    /// Write one tensor to a file (or stdout)
    Export {
        #[command(flatten)]
        common: Common,
        /// f, d, v, pf, delta, k<m>, d<m>, v<m>, omega<q> or t<m>
        #[arg(long)]
        tensor: String,
    },
    /// Read a tensor file and print a summary, or rewrite it with --out
    Import {
        #[command(flatten)]
        common: Common,
        path: PathBuf,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Algebra, e.g. su3, so5, sp3, so8 or A2, B2, C3, D4
    #[arg(long, default_value = "su3")]
    pub algebra: String,
    /// Order of the requested cocycle or tensor
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Add radical forms a*sqrt(b)/c next to decimal values
    #[arg(long)]
    pub exact: bool,
    /// Output file (a directory for `tables`)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// For D_l: pick the Pfaffian cocycle when two share an order
    #[arg(long)]
    pub pfaffian: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Json,
}

impl Common {
    fn spec(&self) -> Result<AlgebraSpec> {
        AlgebraSpec::parse(&self.algebra)
    }

    fn check(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(LieError::Shape("--tolerance must be positive".into()));
        }
        Ok(())
    }

    fn render(&self, t: &AnyTensor, label: &str) -> String {
        match self.format {
            Format::Tsv => io::to_text(t, label, self.exact),
            Format::Json => io::to_json(t, label, self.exact) + "\n",
        }
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(p) => io::write_file(p, text),
            None => {
                let mut o = std::io::stdout().lock();
                o.write_all(text.as_bytes()).map_err(|source| LieError::Io { path: "<stdout>".into(), source })
            }
        }
    }

    fn order(&self, what: &str) -> Result<usize> {
        self.order.ok_or_else(|| LieError::Shape(format!("{what} needs --order")))
    }
}

/// Exit status: 0 success, 1 a check failed, 2 usage, input or I/O error.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Tables(c) => tables(&c).map(|_| true),
        Command::Verify(c) => {
            c.check()?;
            let opts = VerifyOptions { tolerance: c.tolerance, seed: c.seed, ..Default::default() };
            report(&c, &verify_algebra(&c.spec()?, &opts)?)
        }
        Command::Cocycle(c) => {
            let q = c.order("cocycle")?;
            let (g, f) = setup(&c)?;
            let omega = tower_cocycle(&g, &f, q, c.pfaffian)?;
            c.emit(&c.render(&omega.into(), &g.spec.label)).map(|_| true)
        }
        Command::Ttensor(c) => {
            let m = c.order("ttensor")?;
            if m < 2 {
                return Err(LieError::OrderOutOfRange { op: "ttensor", order: m, range: ">= 2" });
            }
            let (g, f) = setup(&c)?;
            let omega = tower_cocycle(&g, &f, 2 * m - 1, c.pfaffian)?;
            let t = t_tensor(&omega, &f)?;
            eprintln!("K^({m}) = {}", k_scalar(&t));
            c.emit(&c.render(&t.into(), &g.spec.label)).map(|_| true)
        }
        Command::Dual(c) => {
            c.check()?;
            let (g, f) = setup(&c)?;
            let tower = primitive_tensors(&g)?
                .into_iter()
                .map(|(_, h)| cocycle_from_sym(&f, &h))
                .collect::<Result<Vec<AltTensor>>>()?;
            report(&c, &check_duality(&tower, &g.spec.label, c.tolerance)?)
        }
        Command::Identities(c) => {
            c.check()?;
            let g = build_algebra(&c.spec()?)?;
            let mut reps = Vec::new();
            if g.spec.family == Family::A && (3..=6).contains(&g.n()) {
                reps.extend(trace_identity_suite(g.n(), c.tolerance)?);
            }
            reps.extend(cayley_hamilton_check(&g, 20, c.seed, c.tolerance)?);
            report(&c, &reps)
        }
        Command::Export { common, tensor } => {
            let (g, f) = setup(&common)?;
            let t = named_tensor(&g, &f, &tensor, common.pfaffian)?;
            common.emit(&common.render(&t, &g.spec.label)).map(|_| true)
        }
        Command::Import { common, path } => {
            let file = io::read_file(&path)?;
            if common.out.is_some() || common.format == Format::Json {
                common.emit(&common.render(&file.tensor, &file.algebra))?;
            } else {
                let t = &file.tensor;
                let max = t.entries().iter().fold(0.0f64, |m, e| m.max(e.1.abs()));
                println!(
                    "kind={} order={} dim={} algebra={} entries={} max_abs={max}",
                    if t.kind() == io::Kind::Sym { "sym" } else { "alt" },
                    t.order(),
                    t.dim(),
                    file.algebra,
                    t.nnz()
                );
            }
            Ok(true)
        }
    }
}

fn setup(c: &Common) -> Result<(GeneratorSet, AltTensor)> {
    let g = build_algebra(&c.spec()?)?;
    let f = structure_constants(&g)?;
    Ok((g, f))
}

fn tables(c: &Common) -> Result<()> {
    let (g, f) = setup(c)?;
    let label = g.spec.label.clone();
    let mut listing: Vec<(&str, AnyTensor)> = vec![("f", f.clone().into())];
    if g.spec.family == Family::A {
        let d = d_tensor(&g)?;
        listing.push(("d", d.clone().into()));
        if g.n() >= 3 {
            listing.push(("omega5", omega5(&f, &d)?.into()));
        }
        if g.n() >= 4 {
            listing.push(("omega7", omega7_su(&f, &d)?.into()));
        }
    } else {
        let v = v_tensor(&g)?;
        listing.push(("v", v.clone().into()));
        listing.push(("omega7", cocycle_from_sym(&f, &v)?.into()));
    }
    match &c.out {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|source| LieError::Io { path: dir.display().to_string(), source })?;
            let ext = if c.format == Format::Json { "json" } else { "tsv" };
            for (name, t) in &listing {
                io::write_file(&dir.join(format!("{name}.{ext}")), &c.render(t, &label))?;
            }
            Ok(())
        }
        None => {
            let text: Vec<String> = listing.iter().map(|(_, t)| c.render(t, &label)).collect();
            c.emit(&text.join("\n"))
        }
    }
}

fn report(c: &Common, reps: &[IdentityReport]) -> Result<bool> {
    let ok = reps.iter().all(|r| r.pass);
    let text = match c.format {
        Format::Json => serde_json::to_string_pretty(reps).expect("report json") + "\n",
        Format::Tsv => {
            let mut s = String::from("status\tname\talgebra\tresidual\ttolerance\tdetails\n");
            for r in reps {
                let status = if r.is_skipped() {
                    "SKIP"
                } else if r.pass {
                    "PASS"
                } else {
                    "FAIL"
                };
                s.push_str(&format!("{status}\t{}\t{}\t{:.3e}\t{:.1e}\t{}\n", r.name, r.algebra, r.max_residual, r.tolerance, r.details));
            }
            let failed = reps.iter().filter(|r| !r.pass).count();
            s.push_str(&format!("# {} checks, {failed} failed\n", reps.len()));
            s
        }
    };
    match &c.out {
        Some(p) => io::write_file(Path::new(p), &text)?,
        None => print!("{text}"),
    }
    Ok(ok)
}
