use std::path::Path;

use clap::ValueEnum;
use serde::Deserialize;

/// Environment variable naming a TOML config file.
pub const CONFIG_ENV: &str = "RANKONE_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    max_n: Option<usize>,
    max_k: Option<usize>,
    format: Option<Format>,
    trace: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub max_n: usize,
    pub max_k: usize,
    pub format: Format,
    pub trace: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_n: rankone_core::group_data::DEFAULT_MAX_RANK,
            max_k: 10,
            format: Format::Text,
            trace: false,
        }
    }
}

/// Overrides given on the command line.
#[derive(Debug, Default)]
pub struct Overrides {
    pub max_n: Option<usize>,
    pub max_k: Option<usize>,
    pub format: Option<Format>,
    pub trace: bool,
}

impl Config {
    /// Defaults, then the file named by [`CONFIG_ENV`], then the flags.
    pub fn load(flags: Overrides) -> Result<Config, String> {
        let file = match std::env::var_os(CONFIG_ENV) {
            Some(path) if !path.is_empty() => read_file(Path::new(&path))?,
            _ => FileConfig::default(),
        };
        let base = Config::default();
        let config = Config {
            max_n: flags.max_n.or(file.max_n).unwrap_or(base.max_n),
            max_k: flags.max_k.or(file.max_k).unwrap_or(base.max_k),
            format: flags.format.or(file.format).unwrap_or(base.format),
            trace: flags.trace || file.trace.unwrap_or(base.trace),
        };
        if config.max_n == 0 {
            return Err("max_n must be positive".into());
        }
        Ok(config)
    }
}

fn read_file(path: &Path) -> Result<FileConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
}
