use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::partition_a::SetPartitionA;
use super::signed::{BPartition, DPartition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedBlockJson {
    pub elements: Vec<i32>,
    pub zero_block: bool,
}

/// Wire form of a partition, tagged by model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "model")]
pub enum PartitionJson {
    A { n: usize, blocks: Vec<Vec<usize>> },
    B { n: usize, blocks: Vec<SignedBlockJson> },
    D { n: usize, blocks: Vec<SignedBlockJson> },
}

fn signed_blocks(blocks: &[Vec<i32>]) -> Vec<SignedBlockJson> {
    blocks
        .iter()
        .map(|b| SignedBlockJson { elements: b.clone(), zero_block: DPartition::is_zero_block(b) })
        .collect()
}

fn elements(blocks: &[SignedBlockJson]) -> Vec<Vec<i32>> {
    blocks.iter().map(|b| b.elements.clone()).collect()
}

impl From<&SetPartitionA> for PartitionJson {
    fn from(p: &SetPartitionA) -> Self {
        PartitionJson::A { n: p.n(), blocks: p.blocks().to_vec() }
    }
}

impl From<&DPartition> for PartitionJson {
    fn from(p: &DPartition) -> Self {
        PartitionJson::D { n: p.n(), blocks: signed_blocks(p.blocks()) }
    }
}

impl From<&BPartition> for PartitionJson {
    fn from(p: &BPartition) -> Self {
        PartitionJson::B { n: p.n(), blocks: signed_blocks(p.blocks()) }
    }
}

impl PartitionJson {
    pub fn to_a(&self) -> Option<Result<SetPartitionA>> {
        match self {
            PartitionJson::A { n, blocks } => Some(SetPartitionA::new(*n, blocks.clone())),
            _ => None,
        }
    }

    pub fn to_d(&self) -> Option<Result<DPartition>> {
        match self {
            PartitionJson::D { n, blocks } => Some(DPartition::new(*n, elements(blocks))),
            _ => None,
        }
    }

    pub fn to_b(&self) -> Option<Result<BPartition>> {
        match self {
            PartitionJson::B { n, blocks } => Some(BPartition::new(*n, elements(blocks))),
            _ => None,
        }
    }
}
