use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use akblocks::io::{read_input, to_json, write_block, Input};
use akblocks::verify::{self, Bounds, Suite};
use akblocks::{
    base_tuple, block_hk, block_oracle, e_core_and_weight, eta, fuse, generate_block,
    is_core_block, is_r_rouquier_block, is_r_rouquier_partition, is_rouquier_block,
    is_rouquier_multipartition, is_rouquier_partition, is_staircase_block, level_rank,
    parse_components, r_circle, recharged_base_tuple, reduce_to_staircase, residue_multiset,
    rouquier_normalize, same_block, scopes_move_valid, split, stretch, upsilon_shift, upsilon_swap,
    AbacusConfig, Block, EquivalenceChain, Error, MultiAbacus, Partition, DEFAULT_ORACLE_LIMIT,
};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

/// Abacus combinatorics for blocks of Ariki-Koike algebras.
#[derive(Parser)]
#[command(name = "akblocks", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the e-quotient and runner charges of a charged partition.
    Eta(WithE<ConfigArgs>),
    /// Print the e-core and e-weight of a partition.
    Core(WithE<ConfigArgs>),
    #[command(subcommand)]
    Block(BlockCommand),
    #[command(subcommand)]
    Uglov(UglovCommand),
    #[command(subcommand)]
    Rouquier(RouquierCommand),
    /// Add beads to the runners while keeping the e-quotient.
    Stretch {
        #[command(flatten)]
        input: WithE<MultiArgs>,
        /// Beads added to each runner, e.g. 0,1,3.
        #[arg(
            long,
            value_delimiter = ',',
            allow_negative_numbers = true,
            required = true
        )]
        vector: Vec<i64>,
    },
    #[command(subcommand)]
    Scopes(ScopesCommand),
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Run a property suite and print one line per property.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest e in the sweep.
        #[arg(long, default_value_t = 3)]
        e: usize,
        /// Largest r in the sweep.
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Largest n in the sweep.
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum BlockCommand {
    /// Close a seed under bead moves and print the block file.
    Generate(WithE<MultiArgs>),
    /// Filter all multipartitions of n by the residues of a seed.
    Oracle {
        #[command(flatten)]
        input: WithE<MultiArgs>,
        /// Largest number of candidate multipartitions to enumerate.
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        window: u64,
    },
    /// Summarize the block of a seed.
    Info(WithE<MultiArgs>),
    /// Decide whether two multipartitions lie in the same block.
    Same {
        #[command(flatten)]
        input: WithE<MultiArgs>,
        /// The second multipartition, in the --components syntax.
        #[arg(long)]
        other: String,
        /// Multicharge of the second multipartition; defaults to --charges.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        other_charges: Option<Vec<i64>>,
    },
}

#[derive(Subcommand)]
enum UglovCommand {
    /// Merge the components into a single charged abacus.
    Fuse(WithE<MultiArgs>),
    /// Split a charged abacus into r components.
    Split {
        #[command(flatten)]
        input: WithE<ConfigArgs>,
        #[arg(long)]
        r: usize,
    },
    /// The e-quotient and runner charges of the fused abacus.
    LevelRank(WithE<MultiArgs>),
}

#[derive(Subcommand)]
enum RouquierCommand {
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Rouquier and r-Rouquier inequalities for one charged partition.
    Partition {
        #[command(flatten)]
        input: WithE<ConfigArgs>,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Whether every component is a Rouquier partition.
    Multipartition(WithE<MultiArgs>),
    /// Whether the block of a seed is a Rouquier block.
    Block(WithE<MultiArgs>),
    /// Whether the block of a single charged abacus is r-Rouquier.
    RBlock {
        #[command(flatten)]
        input: WithE<ConfigArgs>,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Subcommand)]
enum ScopesCommand {
    /// Exchange runners i and i+1 (runners e-1 and 0 when i = e-1).
    Swap {
        #[command(flatten)]
        input: WithE<MultiArgs>,
        #[arg(long)]
        i: usize,
    },
    /// Raise every charge by one.
    Shift(WithE<MultiArgs>),
    /// Whether the runner swap i is a Scopes move on the block of a seed.
    Valid {
        #[command(flatten)]
        input: WithE<MultiArgs>,
        #[arg(long)]
        i: usize,
    },
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Move a core block to a staircase block.
    Staircase(WithE<MultiArgs>),
    /// Move a core or Rouquier block to one whose fused image is r-Rouquier.
    Normalize(WithE<MultiArgs>),
    /// Re-validate a chain read from --input.
    Replay {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Args)]
struct WithE<T: Args> {
    #[arg(long)]
    e: usize,
    #[command(flatten)]
    inner: T,
}

#[derive(Args)]
struct ConfigArgs {
    /// Comma-separated parts.
    #[arg(long, value_parser = parse_partition)]
    partition: Option<Partition>,
    #[arg(long, allow_negative_numbers = true)]
    charge: Option<i64>,
    /// Read the value from a file, or standard input for "-".
    #[arg(long, conflicts_with_all = ["partition", "charge"])]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct MultiArgs {
    /// Components separated by "|", parts by ",".
    #[arg(long, value_parser = parse_multi_components)]
    components: Option<Components>,
    #[arg(
        long,
        alias = "multicharge",
        value_delimiter = ',',
        allow_negative_numbers = true
    )]
    charges: Option<Vec<i64>>,
    /// A single partition, read as one component.
    #[arg(long, value_parser = parse_partition, conflicts_with = "components")]
    partition: Option<Partition>,
    #[arg(long, allow_negative_numbers = true, conflicts_with = "charges")]
    charge: Option<i64>,
    /// Read the value from a file, or standard input for "-".
    #[arg(long, conflicts_with_all = ["components", "charges", "partition", "charge"])]
    input: Option<PathBuf>,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone)]
struct Components(Vec<Partition>);

fn parse_multi_components(s: &str) -> Result<Components, String> {
    parse_components(s)
        .map(Components)
        .map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Domain(Error),
    Report(Vec<String>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<Vec<String>, Failure>;

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Usage(format!("--input {}: {e}", path.display())))?;
    Ok(text)
}

fn load(path: &PathBuf) -> Result<Input, Failure> {
    read_input(&read_text(path)?)
        .map_err(|e| Failure::Usage(format!("--input {}: {e}", path.display())))
}

impl ConfigArgs {
    fn resolve(&self) -> Result<AbacusConfig, Failure> {
        if let Some(path) = &self.input {
            let m = load(path)?.into_multi()?;
            if m.r() != 1 {
                return Err(Failure::Usage(format!(
                    "--input {}: expected a single charged partition",
                    path.display()
                )));
            }
            return Ok(m.components()[0].clone());
        }
        let partition = self
            .partition
            .clone()
            .ok_or_else(|| Failure::Usage("--partition (or --input) is required".into()))?;
        Ok(AbacusConfig::new(partition, self.charge.unwrap_or(0)))
    }
}

impl MultiArgs {
    fn resolve(&self) -> Result<MultiAbacus, Failure> {
        if let Some(path) = &self.input {
            return Ok(load(path)?.into_multi()?);
        }
        if let Some(p) = &self.partition {
            return Ok(AbacusConfig::new(p.clone(), self.charge.unwrap_or(0)).into());
        }
        let Components(components) = self.components.clone().ok_or_else(|| {
            Failure::Usage("--components, --partition or --input is required".into())
        })?;
        let charges = self
            .charges
            .clone()
            .unwrap_or_else(|| vec![0; components.len()]);
        if charges.len() != components.len() {
            return Err(Failure::Usage(format!(
                "--charges has {} entries but --components has {}",
                charges.len(),
                components.len()
            )));
        }
        Ok(MultiAbacus::from_parts(components, charges)?)
    }
}

fn check_e(e: usize) -> Result<(), Failure> {
    if e < 2 {
        return Err(Failure::Usage(format!("--e must be at least 2, got {e}")));
    }
    Ok(())
}

fn lines(text: String) -> Vec<String> {
    text.lines().map(str::to_string).collect()
}

fn block_of(args: &WithE<MultiArgs>) -> Result<Block, Failure> {
    check_e(args.e)?;
    Ok(generate_block(&args.inner.resolve()?, args.e))
}

/// Prints a charged partition as a config, anything wider as a multipartition.
fn emit(m: &MultiAbacus) -> String {
    if m.r() == 1 {
        to_json(&m.components()[0])
    } else {
        to_json(m)
    }
}

fn emit_chain(chain: &EquivalenceChain, target: &Block) -> Vec<String> {
    let mut out = vec![to_json(chain)];
    out.extend(lines(write_block(target)));
    out
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Eta(a) => {
            check_e(a.e)?;
            Ok(vec![to_json(&eta(&a.inner.resolve()?, a.e))])
        }
        Command::Core(a) => {
            check_e(a.e)?;
            let (core, weight) = e_core_and_weight(&a.inner.resolve()?.partition, a.e);
            Ok(vec![json!({"core": core, "weight": weight}).to_string()])
        }
        Command::Block(BlockCommand::Generate(a)) => Ok(lines(write_block(&block_of(&a)?))),
        Command::Block(BlockCommand::Oracle { input, window }) => {
            check_e(input.e)?;
            let seed = input.inner.resolve()?;
            let residues = residue_multiset(&seed, input.e);
            let block = block_oracle(seed.size(), &seed.charges(), input.e, &residues, window)?
                .expect("the seed matches its own residues");
            Ok(lines(write_block(&block)))
        }
        Command::Block(BlockCommand::Info(a)) => {
            let b = block_of(&a)?;
            let circle: Vec<usize> = r_circle(&b)
                .into_iter()
                .filter_map(|m| b.index_of(m))
                .collect();
            let core = is_core_block(&b);
            let recharge = match (core, base_tuple(&b)) {
                (true, Err(_)) => Some(recharged_base_tuple(&b)?),
                _ => None,
            };
            Ok(vec![json!({
                "size": b.len(),
                "hk": block_hk(&b),
                "r_circle": circle,
                "core": core,
                "staircase": if core { Some(is_staircase_block(&b)?) } else { None },
                "base_tuple": base_tuple(&b).ok(),
                "recharged_base_tuple": recharge,
                "rouquier": is_rouquier_block(&b),
            })
            .to_string()])
        }
        Command::Block(BlockCommand::Same {
            input,
            other,
            other_charges,
        }) => {
            check_e(input.e)?;
            let x = input.inner.resolve()?;
            let parts =
                parse_components(&other).map_err(|e| Failure::Usage(format!("--other: {e}")))?;
            let charges = other_charges.unwrap_or_else(|| x.charges());
            if charges.len() != parts.len() {
                return Err(Failure::Usage(
                    "--other and --other-charges differ in length".into(),
                ));
            }
            let y = MultiAbacus::from_parts(parts, charges)?;
            Ok(vec![
                json!({"same_block": same_block(&x, &y, input.e)?}).to_string()
            ])
        }
        Command::Uglov(UglovCommand::Fuse(a)) => {
            check_e(a.e)?;
            Ok(vec![to_json(&fuse(&a.inner.resolve()?, a.e))])
        }
        Command::Uglov(UglovCommand::Split { input, r }) => {
            check_e(input.e)?;
            if r == 0 {
                return Err(Failure::Usage("--r must be positive".into()));
            }
            Ok(vec![to_json(&split(&input.inner.resolve()?, r, input.e))])
        }
        Command::Uglov(UglovCommand::LevelRank(a)) => {
            check_e(a.e)?;
            Ok(vec![to_json(&level_rank(&a.inner.resolve()?, a.e))])
        }
        Command::Rouquier(RouquierCommand::Check(check)) => rouquier_check(check),
        Command::Stretch { input, vector } => {
            check_e(input.e)?;
            Ok(vec![emit(&stretch(
                &input.inner.resolve()?,
                &vector,
                input.e,
            )?)])
        }
        Command::Scopes(ScopesCommand::Swap { input, i }) => {
            check_e(input.e)?;
            if i >= input.e {
                return Err(Failure::Usage(format!("--i must be below --e, got {i}")));
            }
            Ok(vec![emit(&upsilon_swap(
                &input.inner.resolve()?,
                i,
                input.e,
            )?)])
        }
        Command::Scopes(ScopesCommand::Shift(a)) => {
            Ok(vec![emit(&upsilon_shift(&a.inner.resolve()?))])
        }
        Command::Scopes(ScopesCommand::Valid { input, i }) => {
            let b = block_of(&input)?;
            Ok(vec![json!({"valid": scopes_move_valid(&b, i)}).to_string()])
        }
        Command::Reduce(ReduceCommand::Staircase(a)) => {
            let (chain, target) = reduce_to_staircase(&block_of(&a)?)?;
            Ok(emit_chain(&chain, &target))
        }
        Command::Reduce(ReduceCommand::Normalize(a)) => {
            let (chain, target) = rouquier_normalize(&block_of(&a)?)?;
            Ok(emit_chain(&chain, &target))
        }
        Command::Reduce(ReduceCommand::Replay { input }) => {
            let chain = match load(&input)? {
                Input::Chain(c) => c,
                _ => {
                    return Err(Failure::Usage(format!(
                        "--input {}: expected a chain",
                        input.display()
                    )))
                }
            };
            let replay = chain.replay()?;
            Ok(vec![json!({
                "valid": true,
                "steps": chain.steps.len(),
                "source_size": replay.source.len(),
                "target_size": replay.target.len(),
            })
            .to_string()])
        }
        Command::Verify { suite, e, r, n } => {
            let suite: Suite = suite
                .parse()
                .map_err(|e: Error| Failure::Usage(format!("--suite: {e}")))?;
            if e < 2 || r < 1 {
                return Err(Failure::Usage(
                    "--e must be at least 2 and --r at least 1".into(),
                ));
            }
            let report = verify::run(
                suite,
                Bounds {
                    max_e: e,
                    max_r: r,
                    max_n: n,
                },
            );
            let mut out: Vec<String> = report.checks.iter().map(ToString::to_string).collect();
            let passed = report.passed();
            out.push(if passed {
                "PASS".to_string()
            } else {
                "FAIL".to_string()
            });
            if passed {
                Ok(out)
            } else {
                Err(Failure::Report(out))
            }
        }
    }
}

fn rouquier_check(check: CheckCommand) -> Outcome {
    let out = match check {
        CheckCommand::Partition { input, r } => {
            check_e(input.e)?;
            let c = input.inner.resolve()?;
            json!({
                "rouquier": is_rouquier_partition(&c, input.e),
                "r_rouquier": is_r_rouquier_partition(&c, input.e, r),
            })
        }
        CheckCommand::Multipartition(a) => {
            check_e(a.e)?;
            json!({"rouquier": is_rouquier_multipartition(&a.inner.resolve()?, a.e)})
        }
        CheckCommand::Block(a) => json!({"rouquier": is_rouquier_block(&block_of(&a)?)}),
        CheckCommand::RBlock { input, r } => {
            check_e(input.e)?;
            let b = generate_block(&input.inner.resolve()?.into(), input.e);
            json!({"r_rouquier": is_r_rouquier_block(&b, r)?})
        }
    };
    Ok(vec![out.to_string()])
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            for line in out {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
        Err(Failure::Report(out)) => {
            for line in out {
                println!("{line}");
            }
            ExitCode::from(1)
        }
    }
}
