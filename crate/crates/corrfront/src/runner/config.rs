//! Experiment configuration: defaults, config-file parsing, flag parsing, and
//! validation. Flags override file values; every validation problem is
//! collected and reported at once.

use crate::lattice::PeriodicPattern;

/// CLI subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Front,
    Moments,
    Rmt,
    Initstate,
    Verify,
}

impl Command {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "front" => Some(Self::Front),
            "moments" => Some(Self::Moments),
            "rmt" => Some(Self::Rmt),
            "initstate" => Some(Self::Initstate),
            "verify" => Some(Self::Verify),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Front => "front",
            Self::Moments => "moments",
            Self::Rmt => "rmt",
            Self::Initstate => "initstate",
            Self::Verify => "verify",
        }
    }
}

/// Inclusive arithmetic grid min, min+step, ..., max.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SGrid {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl SGrid {
    pub fn values(&self) -> Vec<f64> {
        let n = ((self.max - self.min) / self.step + 1e-9).floor() as usize;
        (0..=n).map(|k| self.min + k as f64 * self.step).collect()
    }
}

/// A fully validated experiment description.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub command: Command,
    pub t_list: Vec<f64>,
    pub s_grid: SGrid,
    pub lambda_list: Vec<f64>,
    pub pattern: PeriodicPattern,
    /// CSV destination; stdout when empty.
    pub output_path: String,
    pub nodes: usize,
    pub verbose: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            command: Command::Moments,
            t_list: vec![100.0],
            s_grid: SGrid {
                min: -6.0,
                max: 4.0,
                step: 0.5,
            },
            lambda_list: vec![0.5],
            pattern: PeriodicPattern::alternating(),
            output_path: String::new(),
            nodes: 64,
            verbose: false,
        }
    }
}

/// Raw key-value assignments before validation, with their source recorded
/// for the flag-over-file precedence note.
#[derive(Debug, Default, Clone)]
struct RawConfig {
    command: Option<String>,
    t: Option<String>,
    s: Option<String>,
    lambda: Option<String>,
    pattern: Option<String>,
    out: Option<String>,
    nodes: Option<String>,
    verbose: Option<String>,
}

impl RawConfig {
    fn set(&mut self, key: &str, value: &str, errors: &mut Vec<String>) -> Vec<String> {
        let mut overridden = Vec::new();
        let slot = match key {
            "command" => &mut self.command,
            "t" => &mut self.t,
            "s" => &mut self.s,
            "lambda" => &mut self.lambda,
            "pattern" => &mut self.pattern,
            "out" => &mut self.out,
            "nodes" => &mut self.nodes,
            "verbose" => &mut self.verbose,
            _ => {
                errors.push(format!("unknown key {key:?}"));
                return overridden;
            }
        };
        if let Some(old) = slot.replace(value.to_string()) {
            if old != value {
                overridden.push(format!("{key}: {old:?} -> {value:?}"));
            }
        }
        overridden
    }
}

fn parse_f64_list(text: &str, what: &str, errors: &mut Vec<String>) -> Vec<f64> {
    let mut out = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            errors.push(format!("empty entry in {what} list {text:?}"));
            continue;
        }
        match piece.parse::<f64>() {
            Ok(v) if v.is_finite() => out.push(v),
            _ => errors.push(format!("cannot parse {piece:?} in {what} list")),
        }
    }
    if out.is_empty() {
        errors.push(format!("{what} list {text:?} is empty"));
    }
    out
}

fn parse_grid(text: &str, errors: &mut Vec<String>) -> Option<SGrid> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        errors.push(format!("grid must be min:max:step, got {text:?}"));
        return None;
    }
    let mut nums = [0.0f64; 3];
    for (slot, part) in nums.iter_mut().zip(&parts) {
        match part.trim().parse::<f64>() {
            Ok(v) if v.is_finite() => *slot = v,
            _ => {
                errors.push(format!("cannot parse {part:?} in grid {text:?}"));
                return None;
            }
        }
    }
    let grid = SGrid {
        min: nums[0],
        max: nums[1],
        step: nums[2],
    };
    if grid.step <= 0.0 {
        errors.push(format!("grid step must be > 0, got {}", grid.step));
        return None;
    }
    if grid.max < grid.min {
        errors.push(format!("grid max {} below min {}", grid.max, grid.min));
        return None;
    }
    let points = (grid.max - grid.min) / grid.step;
    if !points.is_finite() || points > 100_000.0 {
        errors.push(format!(
            "grid {text:?} would have more than 100000 points"
        ));
        return None;
    }
    Some(grid)
}

/// Parse a `key = value` config file body. `#` starts a comment.
fn apply_file(body: &str, raw: &mut RawConfig, errors: &mut Vec<String>) {
    for (lineno, line) in body.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match line.split_once('=') {
            Some((key, value)) => {
                raw.set(key.trim(), value.trim(), errors);
            }
            None => errors.push(format!(
                "config line {}: expected key = value, got {line:?}",
                lineno + 1
            )),
        }
    }
}

/// Parse command-line arguments (without the binary name) into a validated
/// configuration, or the full list of problems found.
///
/// Grammar: `[command] [--config FILE] [--t LIST] [--s MIN:MAX:STEP]
/// [--lambda LIST] [--pattern BITS] [--nodes N] [--out PATH] [--verbose]`.
/// Values from `--config` are applied first; explicit flags win.
pub fn parse_config(args: &[String]) -> std::result::Result<ExperimentConfig, Vec<String>> {
    let mut errors = Vec::new();
    let mut file_raw = RawConfig::default();
    let mut flag_raw = RawConfig::default();
    let mut config_path: Option<String> = None;

    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        if !arg.starts_with("--") {
            if i == 0 && Command::parse(arg).is_some() {
                flag_raw.command = Some(arg.clone());
                i += 1;
                continue;
            }
            errors.push(format!("unexpected argument {arg:?}"));
            i += 1;
            continue;
        }
        let key = &arg[2..];
        if key == "verbose" {
            flag_raw.verbose = Some("true".into());
            i += 1;
            continue;
        }
        let value = match args.get(i + 1) {
            Some(v) => v.clone(),
            None => {
                errors.push(format!("flag --{key} needs a value"));
                break;
            }
        };
        match key {
            "config" => config_path = Some(value),
            "t" | "s" | "lambda" | "pattern" | "out" | "nodes" => {
                flag_raw.set(key, &value, &mut errors);
            }
            _ => errors.push(format!("unknown flag --{key}")),
        }
        i += 2;
    }

    if let Some(path) = &config_path {
        match std::fs::read_to_string(path) {
            Ok(body) => apply_file(&body, &mut file_raw, &mut errors),
            Err(e) => errors.push(format!("cannot read config {path:?}: {e}")),
        }
    }

    // Flags override the file; remember what was shadowed for --verbose.
    let mut overridden = Vec::new();
    let mut merged = file_raw;
    for (key, value) in [
        ("command", &flag_raw.command),
        ("t", &flag_raw.t),
        ("s", &flag_raw.s),
        ("lambda", &flag_raw.lambda),
        ("pattern", &flag_raw.pattern),
        ("out", &flag_raw.out),
        ("nodes", &flag_raw.nodes),
        ("verbose", &flag_raw.verbose),
    ] {
        if let Some(v) = value {
            overridden.extend(merged.set(key, v, &mut errors));
        }
    }

    let defaults = ExperimentConfig::default();
    let command = match &merged.command {
        Some(name) => match Command::parse(name) {
            Some(c) => c,
            None => {
                errors.push(format!(
                    "unknown command {name:?}; expected front|moments|rmt|initstate|verify"
                ));
                defaults.command
            }
        },
        None => defaults.command,
    };
    let t_list = match &merged.t {
        Some(text) => parse_f64_list(text, "t", &mut errors),
        None => defaults.t_list.clone(),
    };
    let s_grid = match &merged.s {
        Some(text) => parse_grid(text, &mut errors).unwrap_or(defaults.s_grid),
        None => defaults.s_grid,
    };
    let lambda_list = match &merged.lambda {
        Some(text) => parse_f64_list(text, "lambda", &mut errors),
        None => defaults.lambda_list.clone(),
    };
    let pattern = match &merged.pattern {
        Some(text) => match PeriodicPattern::parse(text) {
            Ok(p) => p,
            Err(e) => {
                errors.push(e.to_string());
                defaults.pattern.clone()
            }
        },
        None => defaults.pattern.clone(),
    };
    let nodes = match &merged.nodes {
        Some(text) => match text.parse::<usize>() {
            Ok(n) => n,
            Err(_) => {
                errors.push(format!("cannot parse node count {text:?}"));
                defaults.nodes
            }
        },
        None => defaults.nodes,
    };
    let verbose = match merged.verbose.as_deref() {
        Some("true") | Some("1") | Some("yes") => true,
        Some("false") | Some("0") | Some("no") | None => false,
        Some(other) => {
            errors.push(format!("verbose must be a boolean, got {other:?}"));
            false
        }
    };

    // Command-specific validation.
    if !(8..=crate::specfun::MAX_NODES / 2).contains(&nodes) {
        errors.push(format!(
            "nodes must lie in 8..={}, got {nodes}",
            crate::specfun::MAX_NODES / 2
        ));
    }
    match command {
        Command::Moments | Command::Initstate => {
            for &t in &t_list {
                if t < 2.0 {
                    errors.push(format!(
                        "command {} tracks the front and needs every t >= 2, got {t}",
                        command.name()
                    ));
                }
            }
        }
        Command::Front => {
            for &t in &t_list {
                if t < 0.0 {
                    errors.push(format!("front needs t >= 0, got {t}"));
                }
            }
        }
        Command::Rmt => {
            if s_grid.min < -12.0 {
                errors.push(format!(
                    "rmt grid must stay within s >= -12, got min {}",
                    s_grid.min
                ));
            }
            for &lambda in &lambda_list {
                if !(0.0..2.0).contains(&lambda) {
                    errors.push(format!(
                        "rmt lambda values must lie in [0, 2) for both ensembles, got {lambda}"
                    ));
                }
            }
        }
        Command::Verify => {}
    }

    if !errors.is_empty() {
        return Err(errors);
    }
    let config = ExperimentConfig {
        command,
        t_list,
        s_grid,
        lambda_list,
        pattern,
        output_path: merged.out.unwrap_or_default(),
        nodes,
        verbose,
    };
    if verbose {
        for note in overridden {
            eprintln!("[config] flag overrides file for {note}");
        }
    }
    Ok(config)
}
