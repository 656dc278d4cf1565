use std::fmt::{Display, Write};

use dicut::rational::{format_rational, from_units};
use dicut::{ApproxCutReport, CutElements, CutOutcome, CutResult, GuessRecord, LocalStats, OpCounts};

/// Flat `key=value` record, one pair per line, in insertion order.
#[derive(Debug, Default)]
pub struct Record {
    lines: Vec<(String, String)>,
}

pub fn join<T: Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl Record {
    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.lines.push((key.into(), value.to_string()));
    }

    pub fn counts(&mut self, c: &OpCounts) {
        for (k, v) in c.fields() {
            self.push(format!("count.{k}"), v);
        }
    }

    pub fn local(&mut self, s: &LocalStats) {
        for (k, v) in s.fields() {
            self.push(format!("local.{k}"), v);
        }
    }

    pub fn cut(&mut self, c: &CutResult) {
        self.push("result", "cut");
        self.push("weight", format_rational(&c.weight()));
        self.push("weight_units", c.weight_units);
        self.push("denominator", c.denominator);
        self.push("root", c.root);
        self.push("sink_size", c.sink_component.len());
        self.push("sink", join(&c.sink_component));
        match &c.elements {
            CutElements::Edges(e) => self.push("cut_edges", join(e)),
            CutElements::Vertices(v) => self.push("separator", join(v)),
        }
    }

    pub fn outcome(&mut self, o: &CutOutcome) {
        match o {
            CutOutcome::Cut(c) => self.cut(c),
            CutOutcome::NoCut => self.push("result", "nocut"),
        }
    }

    fn guess(&mut self, i: usize, g: &GuessRecord, denominator: u64) {
        let best = g.best_units.map_or("-".to_string(), |b| format_rational(&from_units(b, denominator)));
        self.push(
            format!("guess.{i}"),
            format!(
                "root:{} orientation:{} guess:{} k:{} branch:{} best:{best}",
                g.root,
                if g.reversed { "reversed" } else { "forward" },
                format_rational(&from_units(g.guess_units, denominator)),
                g.k,
                g.branch.name(),
            ),
        );
    }

    pub fn report(&mut self, r: &ApproxCutReport, denominator: u64) {
        self.outcome(&r.best);
        self.push("candidates", r.candidates_examined);
        self.push("guesses", r.guesses.len());
        for (i, g) in r.guesses.iter().enumerate() {
            self.guess(i, g, denominator);
        }
        self.counts(&r.counts);
        self.local(&r.local);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.lines {
            writeln!(out, "{k}={v}").expect("writing to a string");
        }
        out
    }
}
