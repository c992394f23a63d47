// SPDX-License-Identifier: Apache-2.0

//! Configuration, sweeps, output formats and self-verification behind the
//! `ergobound` command-line tool.

pub mod config;
pub mod output;
pub mod sweep;
pub mod verify;
