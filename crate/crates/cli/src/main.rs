mod render;

use circgeo::closure::io::parse_geometry;
use circgeo::closure::{
    carousel_check, convex_dimension_with_budget, verify_axioms, AxiomMode, CarouselRule, ClosedFamily,
};
use circgeo::disc::Scene;
use circgeo::harness::{counterexample_suite, fuzz_theorem1, fuzz_theorem2, small_geometry_sweep, FuzzParams};
use circgeo::triangle::{class_of, class_table, config_code, search_realization, ClassId, Triangle};
use circgeo::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(name = "circgeo", version, about = "Convex geometries of circles on a plane")]
struct Cli {
    /// Refuse randomized runs without an explicit --seed.
    #[arg(long, global = true)]
    ci: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    N,
    WeakN,
    #[value(name = "weak-2x3")]
    Weak2x3,
}

#[derive(Subcommand)]
enum Verb {
    /// Check the closure, alignment and convex-geometry axioms.
    Verify { geometry: PathBuf },
    /// Convex dimension by exhaustive chain-cover search.
    Cdim {
        geometry: PathBuf,
        #[arg(long, default_value_t = 7)]
        max_k: usize,
        /// Seconds allowed for refuting smaller k.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check a carousel rule.
    Carousel {
        geometry: PathBuf,
        #[arg(long, value_enum)]
        rule: Rule,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Configuration code and class of circles x and y in the scene triangle.
    Classify { scene: PathBuf },
    /// Search for a scene in a class; prints the scene.
    Realize {
        #[arg(long = "class")]
        class: ClassId,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// The 38 classes with their members.
    ClassTable {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weak carousel property for two circles in a triangle.
    FuzzThm1(FuzzArgs),
    /// Weak 2×3 carousel rule for five circles.
    FuzzThm2(FuzzArgs),
    /// The five-element counterexample geometries.
    Counterexample {
        /// Seconds allowed for the convex dimension.
        #[arg(long, default_value_t = 1800)]
        budget: u64,
    },
    /// Every convex geometry on n <= 4 elements against the weak 2×3 rule.
    Sweep {
        #[arg(long)]
        n: usize,
    },
    /// Draw a scene as SVG.
    Render {
        scene: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Shade the corner regions between vertices and circles.
        #[arg(long)]
        regions: bool,
        /// Fit the scene instead of using the unit box.
        #[arg(long)]
        fit: bool,
    },
}

#[derive(clap::Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1e-3)]
    margin: f64,
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
}

/// Input or usage problems; exit code 2.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_geometry(path: &Path) -> Result<ClosedFamily, Failure> {
    parse_geometry(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_scene(path: &Path) -> Result<Scene, Failure> {
    Scene::from_json(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn seed(ci: bool, seed: Option<u64>) -> Result<u64, Failure> {
    match seed {
        Some(s) => Ok(s),
        None if ci => Err(Failure("--ci requires --seed".into())),
        None => {
            let s = rand::random();
            eprintln!("seed: {s}");
            Ok(s)
        }
    }
}

fn print(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

/// Runs the verb; `Ok(true)` when every check passed.
fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.verb {
        Verb::Verify { geometry } => {
            let g = load_geometry(&geometry)?;
            let reports: Vec<_> = AxiomMode::ALL.iter().map(|&m| verify_axioms(&g, m)).collect();
            print(&reports);
            Ok(reports.iter().all(|r| r.holds))
        }
        Verb::Cdim { geometry, max_k, budget } => {
            let g = load_geometry(&geometry)?;
            match convex_dimension_with_budget(&g, max_k, budget.map(Duration::from_secs)) {
                Ok(r) => {
                    print(&r);
                    Ok(true)
                }
                Err(e @ Error::KMaxExceeded { .. }) => {
                    print(&json!({ "error": e.to_string() }));
                    Ok(false)
                }
                Err(e) => Err(e.into()),
            }
        }
        Verb::Carousel { geometry, rule, n } => {
            let g = load_geometry(&geometry)?;
            let rule = match rule {
                Rule::N => CarouselRule::NCarousel(n),
                Rule::WeakN => CarouselRule::WeakNCarousel(n),
                Rule::Weak2x3 => CarouselRule::Weak2x3,
            };
            let v = carousel_check(&g, rule)?;
            print(&v);
            Ok(v.holds)
        }
        Verb::Classify { scene } => {
            let s = load_scene(&scene)?;
            let t = s.triangle.ok_or_else(|| Failure(format!("{}: scene has no triangle", scene.display())))?;
            let t = Triangle::from_array(t, s.tolerance)?;
            let (x, y) = (s.get("x")?, s.get("y")?);
            let code = config_code(&t, &x, &y, s.tolerance)?;
            let class = class_of(code);
            let realizable = class_table()?.get(class).realizable;
            print(&json!({ "code": code, "class": class, "realizable": realizable }));
            Ok(true)
        }
        Verb::Realize { class, budget, seed: s } => {
            let s = seed(cli.ci, s)?;
            match search_realization(class, budget, s) {
                Some(r) => {
                    println!("{}", r.scene().to_json());
                    Ok(true)
                }
                None => {
                    print(&json!({ "class": class, "found": false, "budget": budget, "seed": s }));
                    Ok(false)
                }
            }
        }
        Verb::ClassTable { out } => {
            let text = class_table()?.to_json();
            match out {
                Some(p) => write(&p, &(text + "\n"))?,
                None => println!("{text}"),
            }
            Ok(true)
        }
        Verb::FuzzThm1(a) | Verb::FuzzThm2(a) if a.trials == 0 => Err(Failure("--trials must be positive".into())),
        Verb::FuzzThm1(a) => {
            let p = FuzzParams { trials: a.trials, seed: seed(cli.ci, a.seed)?, margin: a.margin, tolerance: a.tolerance };
            let r = fuzz_theorem1(p)?;
            println!("{}", r.to_json());
            Ok(r.passed())
        }
        Verb::FuzzThm2(a) => {
            let p = FuzzParams { trials: a.trials, seed: seed(cli.ci, a.seed)?, margin: a.margin, tolerance: a.tolerance };
            let r = fuzz_theorem2(p)?;
            println!("{}", r.to_json());
            Ok(r.passed())
        }
        Verb::Counterexample { budget } => {
            let r = counterexample_suite(Some(Duration::from_secs(budget)))?;
            print(&r);
            Ok(r.passed)
        }
        Verb::Sweep { n } => {
            let r = small_geometry_sweep(n)?;
            print(&r);
            Ok(r.passed())
        }
        Verb::Render { scene, out, regions, fit } => {
            let s = load_scene(&scene)?;
            write(&out, &render::render_svg(&s, regions, fit))?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
