//! Synthetic graph family specs: `path:N`, `cycle:N`, `star:D`, `gnm:N,M`,
//! `grid:W,H`. The random family is seeded from the run configuration.

use anyhow::{anyhow, bail, Result};
use graphlets::gen;
use graphlets::graph::DynGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Star { leaves: usize },
    Gnm { n: usize, m: usize },
    Grid { w: usize, h: usize },
}

impl Family {
    pub fn parse(text: &str) -> Result<Family> {
        let (name, args) = text
            .split_once(':')
            .ok_or_else(|| anyhow!("generator spec '{text}' needs the form name:args"))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| anyhow!("generator spec '{text}': '{t}' is not a count"))
            })
            .collect::<Result<_>>()?;
        let expect = |want: usize| -> Result<()> {
            if nums.len() == want {
                Ok(())
            } else {
                bail!("generator '{name}' takes {want} argument(s), got {}", nums.len())
            }
        };
        match name {
            "path" => {
                expect(1)?;
                Ok(Family::Path { n: nums[0] })
            }
            "cycle" => {
                expect(1)?;
                if nums[0] < 3 {
                    bail!("cycle needs at least 3 vertices");
                }
                Ok(Family::Cycle { n: nums[0] })
            }
            "star" => {
                expect(1)?;
                Ok(Family::Star { leaves: nums[0] })
            }
            "gnm" => {
                expect(2)?;
                Ok(Family::Gnm {
                    n: nums[0],
                    m: nums[1],
                })
            }
            "grid" => {
                expect(2)?;
                Ok(Family::Grid {
                    w: nums[0],
                    h: nums[1],
                })
            }
            other => bail!("unknown generator family '{other}'"),
        }
    }

    pub fn build(&self, seed: u64) -> Result<DynGraph> {
        Ok(match *self {
            Family::Path { n } => gen::path(n),
            Family::Cycle { n } => gen::cycle(n),
            Family::Star { leaves } => gen::star(leaves),
            Family::Gnm { n, m } => gen::gnm(n, m, seed).map_err(|e| anyhow!(e))?,
            Family::Grid { w, h } => gen::grid(w, h),
        })
    }

    pub fn label(&self) -> String {
        match *self {
            Family::Path { n } => format!("path:{n}"),
            Family::Cycle { n } => format!("cycle:{n}"),
            Family::Star { leaves } => format!("star:{leaves}"),
            Family::Gnm { n, m } => format!("gnm:{n},{m}"),
            Family::Grid { w, h } => format!("grid:{w},{h}"),
        }
    }
}
