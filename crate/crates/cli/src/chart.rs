//! Letter-frequency charts: CSV rows, JSON rows, ASCII bars and SVG bars.

use std::fmt::Write;

use hybridcipher_core::cryptanalysis::FrequencyProfile;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ChartFormat {
    Csv,
    Json,
    Ascii,
    Svg,
}

/// One chart row; `percent` is rounded to two decimals, as printed in CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChartRow {
    pub letter: char,
    pub count: u64,
    pub percent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChartDocument {
    pub n: u64,
    pub rows: Vec<ChartRow>,
}

pub fn chart_rows(profile: &FrequencyProfile) -> Vec<ChartRow> {
    (0..26u8)
        .map(|l| ChartRow {
            letter: (b'A' + l) as char,
            count: profile.count(l),
            percent: (profile.percent(l) * 100.0).round() / 100.0,
        })
        .collect()
}

const ASCII_WIDTH: u64 = 50;
const SVG_BAR_MAX: u64 = 400;
const SVG_ROW: u64 = 18;

fn bar_len(count: u64, max: u64, width: u64) -> u64 {
    // rounded to the nearest cell; an all-zero profile draws nothing
    (count * width + max / 2).checked_div(max).unwrap_or(0)
}

pub fn emit_chart(profile: &FrequencyProfile, format: ChartFormat) -> String {
    let rows = chart_rows(profile);
    let max = rows.iter().map(|r| r.count).max().unwrap_or(0);
    let mut out = String::new();
    match format {
        ChartFormat::Csv => {
            for r in &rows {
                writeln!(out, "{},{},{:.2}", r.letter, r.count, r.percent).unwrap();
            }
        }
        ChartFormat::Json => {
            let doc = ChartDocument {
                n: profile.total(),
                rows,
            };
            out = serde_json::to_string_pretty(&doc).expect("chart serializes");
            out.push('\n');
        }
        ChartFormat::Ascii => {
            for r in &rows {
                let bar = "#".repeat(bar_len(r.count, max, ASCII_WIDTH) as usize);
                writeln!(out, "{} |{:<w$} {} ({:.2}%)", r.letter, bar, r.count, r.percent, w = ASCII_WIDTH as usize)
                    .unwrap();
            }
        }
        ChartFormat::Svg => {
            let height = SVG_ROW * 26 + 10;
            let width = SVG_BAR_MAX + 140;
            writeln!(
                out,
                r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="12">"#
            )
            .unwrap();
            for (i, r) in rows.iter().enumerate() {
                let y = 5 + SVG_ROW * i as u64;
                let w = bar_len(r.count, max, SVG_BAR_MAX);
                writeln!(out, r#"  <text x="5" y="{}">{}</text>"#, y + 13, r.letter).unwrap();
                writeln!(
                    out,
                    r##"  <rect x="25" y="{}" width="{w}" height="{}" fill="#4a6fa5"><title>{} {} ({:.2}%)</title></rect>"##,
                    y + 2,
                    SVG_ROW - 4,
                    r.letter,
                    r.count,
                    r.percent
                )
                .unwrap();
                writeln!(out, r#"  <text x="{}" y="{}">{} ({:.2}%)</text>"#, 30 + w, y + 13, r.count, r.percent).unwrap();
            }
            out.push_str("</svg>\n");
        }
    }
    out
}
