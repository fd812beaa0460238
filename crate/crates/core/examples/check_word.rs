//! Alternation checking: does a word represent a graph?

use prn::format::{format_word, parse_graph, parse_word};
use prn::words::{is_uniform, represents, Verdict};

fn main() {
    // path a - x - b - y
    let (g, _) = parse_graph("a x\nx b\nb y\n").unwrap();
    for text in ["a b x y | b y a x", "a x b y | y b x a"] {
        let w = parse_word(text, &g).unwrap();
        match represents(&w.word, &g).unwrap() {
            Verdict::Represents => println!("{text}: represents, {}-uniform", is_uniform(&w.word).unwrap()),
            Verdict::Counterexample { u, v, adjacent, projection } => println!(
                "{text}: fails on {} {} ({}), projection {}",
                g.label(u),
                g.label(v),
                if adjacent { "adjacent" } else { "non-adjacent" },
                format_word(&projection, &g)
            ),
        }
    }
}
