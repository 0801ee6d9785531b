use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use erogers::constructions::{
    construct_coloring, construct_shadow_labeling, estimate_f_cover, estimate_f_cover_exhaustive,
    extract_blowup_copy, verify_g_free, ConstructionParams,
};
use erogers::exact::{enumerate_g_free, f_exact, max_f_free_subset_with, MaxFreeOptions};
use erogers::exponents::{alpha, beta, check_concluding_condition};
use erogers::hypercore::{canonical_labeling, parse_hg, write_hg, write_hg_stream};
use erogers::morphisms::{
    find_homomorphism, find_shadow_homomorphism, is_k_tightly_connected, is_sub_iterated_blowup,
};
use erogers::{canonical_form, count_embeddings, Hypergraph};
use serde_json::json;

use crate::report::{to_value, Outcome};
use crate::{Command, ConstructArgs, Construction, Family};

#[derive(Debug)]
pub enum CliError {
    Io(PathBuf, std::io::Error),
    Core(Option<PathBuf>, erogers::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(_, erogers::Error::Capacity { .. }) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Core(Some(p), e) => write!(f, "{}: {e}", p.display()),
            CliError::Core(None, e) => write!(f, "{e}"),
        }
    }
}

impl From<erogers::Error> for CliError {
    fn from(e: erogers::Error) -> Self {
        CliError::Core(None, e)
    }
}

type Res<T> = Result<T, CliError>;

fn load(path: &Path) -> Res<Hypergraph> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    parse_hg(&text).map_err(|e| CliError::Core(Some(path.to_path_buf()), e))
}

fn save(path: &Path, text: &str) -> Res<()> {
    fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn save_hg(path: &Option<PathBuf>, h: &Hypergraph) -> Res<()> {
    match path {
        Some(p) => save(p, &write_hg(h)),
        None => Ok(()),
    }
}

pub fn run(cmd: Command) -> Res<Outcome> {
    Ok(match cmd {
        Command::Shadow { file, k, output } => {
            let s = load(&file)?.shadow(k)?;
            save_hg(&output, &s)?;
            Outcome::plain(json!({ "file": file, "k": k, "output": output }), &s)
        }
        Command::Hom { g, f } => {
            let w = find_homomorphism(&load(&g)?, &load(&f)?)?;
            Outcome::decided(
                json!({ "g": g, "f": f }),
                w.is_some(),
                json!({ "witness": w }),
            )
        }
        Command::ShadowHom { g, f, k } => {
            let w = find_shadow_homomorphism(&load(&g)?, &load(&f)?, k)?;
            Outcome::decided(
                json!({ "g": g, "f": f, "k": k }),
                w.is_some(),
                json!({ "witness": w }),
            )
        }
        Command::Tight { g, k } => {
            let order = is_k_tightly_connected(&load(&g)?, k)?;
            Outcome::decided(
                json!({ "g": g, "k": k }),
                order.is_some(),
                json!({ "order": order }),
            )
        }
        Command::BlowupMember { g, f, max_steps } => {
            let cert = is_sub_iterated_blowup(&load(&g)?, &load(&f)?, max_steps)?;
            Outcome::decided(
                json!({ "g": g, "f": f, "max_steps": max_steps }),
                cert.is_some(),
                json!({ "certificate": cert }),
            )
        }
        Command::Alpha { f } => Outcome::plain(json!({ "f": f }), alpha(&load(&f)?)?),
        Command::Beta { f } => Outcome::plain(json!({ "f": f }), beta(&load(&f)?)?),
        Command::Concluding { f } => {
            let holds = check_concluding_condition(&load(&f)?)?;
            Outcome::decided(json!({ "f": f }), holds, json!({ "holds": holds }))
        }
        Command::Canon { file } => {
            let h = load(&file)?;
            let form = canonical_form(&h)?;
            let labeling = canonical_labeling(&h)?;
            Outcome::plain(
                json!({ "file": file }),
                json!({ "form": form, "labeling": labeling }),
            )
        }
        Command::Count { pattern, host } => {
            let c = count_embeddings(&load(&pattern)?, &load(&host)?)?;
            Outcome::plain(json!({ "pattern": pattern, "host": host }), c)
        }
        Command::Build {
            family,
            r,
            s,
            output,
        } => {
            let h = match family {
                Family::Complete => Hypergraph::complete(r, s)?,
                Family::Simplex => Hypergraph::simplex(r, s)?,
            };
            save_hg(&output, &h)?;
            let name = match family {
                Family::Complete => "complete",
                Family::Simplex => "simplex",
            };
            Outcome::plain(
                json!({ "family": name, "r": r, "s": s, "output": output }),
                &h,
            )
        }
        Command::Construct(args) => construct(args)?,
        Command::VerifyGfree { h, g } => {
            let copy = verify_g_free(&load(&h)?, &load(&g)?)?;
            Outcome::decided(
                json!({ "h": h, "g": g }),
                copy.is_none(),
                json!({ "copy": copy }),
            )
        }
        Command::Cover {
            h,
            f,
            w,
            trials,
            seed,
            exhaustive,
        } => {
            let (hh, ff) = (load(&h)?, load(&f)?);
            let est = if exhaustive {
                estimate_f_cover_exhaustive(&hh, &ff, w)?
            } else {
                estimate_f_cover(&hh, &ff, w, trials, seed)?
            };
            let inputs =
                json!({ "h": h, "f": f, "w": w, "trials": trials, "exhaustive": exhaustive });
            let out = Outcome::plain(inputs, est);
            if exhaustive {
                out
            } else {
                out.seeded(seed)
            }
        }
        Command::Extract { h, f, steps } => {
            let ext = extract_blowup_copy(&load(&h)?, &load(&f)?, &steps)?;
            Outcome::decided(
                json!({ "h": h, "f": f, "steps": steps }),
                ext.is_some(),
                json!({ "extraction": ext }),
            )
        }
        Command::Maxfree { h, f, packing } => {
            let opts = MaxFreeOptions {
                packing_bound: packing,
                ..Default::default()
            };
            let res = max_f_free_subset_with(&load(&h)?, &load(&f)?, opts)?;
            Outcome::plain(json!({ "h": h, "f": f, "packing": packing }), res)
        }
        Command::Enumerate { g, n, output } => {
            let gg = load(&g)?;
            let classes: Vec<Hypergraph> = enumerate_g_free(n, gg.uniformity(), &gg)?.collect();
            if let Some(p) = &output {
                save(p, &write_hg_stream(&classes))?;
            }
            let mut by_edges = Vec::new();
            for h in &classes {
                if by_edges.len() <= h.edge_count() {
                    by_edges.resize(h.edge_count() + 1, 0usize);
                }
                by_edges[h.edge_count()] += 1;
            }
            Outcome::plain(
                json!({ "g": g, "n": n, "output": output }),
                json!({ "classes": classes.len(), "by_edge_count": by_edges }),
            )
        }
        Command::FExact { f, g, n } => {
            let res = f_exact(&load(&f)?, &load(&g)?, n)?;
            Outcome::plain(json!({ "f": f, "g": g, "n": n }), res)
        }
    })
}

fn construct(a: ConstructArgs) -> Res<Outcome> {
    let f = load(&a.f)?;
    let params = ConstructionParams {
        c1: a.c1,
        c2: a.c2,
        seed: a.seed,
    };
    let (h, cert, extra) = match a.kind {
        Construction::Coloring => {
            if a.k.is_some() {
                return Err(
                    erogers::Error::InvalidParameter("-k applies to labeling only".into()).into(),
                );
            }
            let (h, c) = construct_coloring(a.n, &f, &params)?;
            let ell = c.ell;
            (h, to_value(&c), json!({ "colors": ell }))
        }
        Construction::Labeling => {
            let k = a.k.unwrap_or(f.uniformity().saturating_sub(1));
            let (h, l) = construct_shadow_labeling(a.n, &f, k, &params)?;
            (h, to_value(&l), json!({ "k": k }))
        }
    };
    save_hg(&a.output, &h)?;
    if let Some(p) = &a.cert {
        save(
            p,
            &serde_json::to_string(&cert).expect("certificate serializes"),
        )?;
    }
    let kind = match a.kind {
        Construction::Coloring => "coloring",
        Construction::Labeling => "labeling",
    };
    let inputs = json!({
        "kind": kind, "n": a.n, "f": a.f, "k": a.k,
        "c1": a.c1, "c2": a.c2, "output": a.output, "cert": a.cert,
    });
    let result = json!({
        "vertices": h.vertex_count(),
        "edges": h.edge_count(),
        "parameters": extra,
        "hypergraph": if a.output.is_none() { to_value(&h) } else { serde_json::Value::Null },
    });
    Ok(Outcome::plain(inputs, result).seeded(a.seed))
}
