use serde::Serialize;

use super::*;
use crate::ramsey::{Certificate, EdgeColoring};

/// Output of a generator, serialized in the file format of its type.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Generated {
    Graph(OrderedGraph),
    Hypergraph(OrderedHypergraph),
    Pattern(Pattern),
    Permutation(Vec<usize>),
    Coloring(EdgeColoring),
    Certificate(Box<Certificate>),
}

impl Generated {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("generated value serializes")
    }

    /// Printed form: matrices as rows of digits, everything else as JSON.
    pub fn to_text(&self) -> String {
        match self {
            Generated::Pattern(p) => p.to_text().unwrap_or_else(|| p.to_json()),
            Generated::Certificate(c) => c.to_json_pretty(),
            other => other.to_json(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct GenArgs {
    pub params: Vec<usize>,
    pub certs: Vec<Certificate>,
}

impl GenArgs {
    fn param(&self, i: usize, name: &str) -> Result<usize> {
        self.params
            .get(i)
            .copied()
            .ok_or_else(|| Error::InvalidParameter(format!("missing parameter {name}")))
    }

    fn cert(&self, i: usize) -> Result<&Certificate> {
        self.certs
            .get(i)
            .ok_or_else(|| Error::InvalidParameter(format!("missing certificate #{}", i + 1)))
    }
}

/// A named generator reachable from the command line.
pub trait Construction: Send + Sync {
    fn name(&self) -> &'static str;
    /// Parameter list, for help output.
    fn usage(&self) -> &'static str;
    fn build(&self, args: &GenArgs) -> Result<Generated>;
}

struct Gen {
    name: &'static str,
    usage: &'static str,
    build: fn(&GenArgs) -> Result<Generated>,
}

impl Construction for Gen {
    fn name(&self) -> &'static str {
        self.name
    }

    fn usage(&self) -> &'static str {
        self.usage
    }

    fn build(&self, args: &GenArgs) -> Result<Generated> {
        (self.build)(args)
    }
}

pub fn constructions() -> Vec<Box<dyn Construction>> {
    let g = |name, usage, build| -> Box<dyn Construction> { Box::new(Gen { name, usage, build }) };
    vec![
        g("monotone-path", "N", |a| Ok(Generated::Graph(monotone_path(a.param(0, "N")?)?))),
        g("alternating-cycle", "LEN (even, >= 4)", |a| Ok(Generated::Graph(alternating_cycle(a.param(0, "LEN")?)?))),
        g("nested-matching", "M", |a| Ok(Generated::Graph(nested_matching(a.param(0, "M")?)?))),
        g("centered-matching", "N (odd)", |a| Ok(Generated::Graph(centered_matching(a.param(0, "N")?)?))),
        g("vdc-permutation", "N (power of two)", |a| Ok(Generated::Permutation(vdc_permutation(a.param(0, "N")?)?))),
        g("vdc-permutation-matrix", "N (power of two)", |a| {
            Ok(Generated::Pattern(vdc_permutation_matrix(a.param(0, "N")?)?))
        }),
        g("vdc-matching", "N (power of two)", |a| Ok(Generated::Graph(vdc_matching(a.param(0, "N")?)?))),
        g("blowup-vdc-matching", "N B", |a| {
            Ok(Generated::Graph(blowup_matching(&vdc_matching(a.param(0, "N")?)?, a.param(1, "B")?)?))
        }),
        g("blowup-nested-matching", "M B", |a| {
            Ok(Generated::Graph(blowup_matching(&nested_matching(a.param(0, "M")?)?, a.param(1, "B")?)?))
        }),
        g("tight-hyperpath", "N D", |a| Ok(Generated::Hypergraph(tight_hyperpath(a.param(0, "N")?, a.param(1, "D")?)?))),
        g("alternating-hyperpath", "N D", |a| {
            Ok(Generated::Hypergraph(alternating_hyperpath(a.param(0, "N")?, a.param(1, "D")?)?))
        }),
        g("alternating-order", "N D", |a| {
            Ok(Generated::Permutation(alternating_order(a.param(0, "N")?, a.param(1, "D")?)?))
        }),
        g("hyperpath-tensor", "N D", |a| Ok(Generated::Pattern(hyperpath_tensor(a.param(0, "N")?, a.param(1, "D")?)?))),
        g("alternating-path", "K (staircase definition from the literature)", |a| {
            Ok(Generated::Graph(alternating_path(a.param(0, "K")?)?))
        }),
        g("matrix-f", "", |_| Ok(Generated::Pattern(matrix_f()))),
        g("f-family", "VARIANT J", |a| {
            let fam = f_family(a.param(0, "VARIANT")? as u8)?;
            Ok(Generated::Pattern(fam.member(&matrix_f(), a.param(1, "J")?)?))
        }),
        g("inner-edge-pair", "", |_| Ok(Generated::Graph(inner_edge_pair()))),
        g("outer-edge-pair", "", |_| Ok(Generated::Graph(outer_edge_pair()))),
        g("inner-edge-pair-coloring", "", |_| Ok(Generated::Certificate(Box::new(inner_edge_pair_coloring())))),
        g("outer-edge-pair-coloring", "", |_| Ok(Generated::Certificate(Box::new(outer_edge_pair_coloring())))),
        g("block-product", "BLOCKS SIZE", |a| {
            Ok(Generated::Coloring(block_product_coloring(a.param(0, "BLOCKS")?, a.param(1, "SIZE")?)))
        }),
        g("disjoint-union-coloring", "--cert G --cert H", |a| {
            Ok(Generated::Certificate(Box::new(disjoint_union_coloring(a.cert(0)?, a.cert(1)?)?)))
        }),
        g("spread-blowup-coloring", "K --cert G", |a| {
            Ok(Generated::Certificate(Box::new(spread_blowup_coloring(a.cert(0)?, a.param(0, "K")?)?)))
        }),
        g("pendant-lower-coloring", "--cert G", |a| {
            Ok(Generated::Certificate(Box::new(pendant_lower_coloring(a.cert(0)?)?)))
        }),
    ]
}

pub fn construction(name: &str) -> Result<Box<dyn Construction>> {
    constructions()
        .into_iter()
        .find(|c| c.name() == name)
        .ok_or_else(|| Error::Unknown { kind: "construction", name: name.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_parameterless_generator_runs() {
        for c in constructions() {
            if c.usage().is_empty() {
                c.build(&GenArgs::default()).unwrap();
            }
        }
        let args = GenArgs { params: vec![8], certs: vec![] };
        assert_eq!(
            construction("alternating-cycle").unwrap().build(&args).unwrap().to_json(),
            r#"{"n":8,"edges":[[0,6],[0,7],[1,5],[1,7],[2,4],[2,6],[3,4],[3,5]]}"#
        );
    }
}
