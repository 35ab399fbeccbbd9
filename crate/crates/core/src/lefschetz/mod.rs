//! Reduced Lefschetz class functions of a group acting on a nerve.

pub mod routes;
pub mod screen;

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::ConjugacyClassTable;

pub use routes::{cross_validate, lefschetz_fixed_point, lefschetz_induced, poset_reduced_euler, CrossValidation};
pub use screen::{p_singular_vanishing, vertex_screen, SingularReport, VertexEntry, VertexScreenReport};

/// An integer-valued function on the conjugacy classes of a group.
#[derive(Debug, Clone)]
pub struct ClassFunction {
    table: Arc<ConjugacyClassTable>,
    values: Vec<i64>,
}

impl ClassFunction {
    pub fn new(table: &Arc<ConjugacyClassTable>, values: Vec<i64>) -> Result<Self> {
        if values.len() != table.len() {
            return Err(Error::InvalidInput(format!(
                "{} values for {} classes",
                values.len(),
                table.len()
            )));
        }
        Ok(ClassFunction {
            table: table.clone(),
            values,
        })
    }

    pub fn constant(table: &Arc<ConjugacyClassTable>, c: i64) -> Self {
        ClassFunction {
            table: table.clone(),
            values: vec![c; table.len()],
        }
    }

    pub fn table(&self) -> &Arc<ConjugacyClassTable> {
        &self.table
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value(&self, class: usize) -> i64 {
        self.values[class]
    }

    /// The value on the class with the given cycle-type label.
    pub fn value_at(&self, label: &str) -> Option<i64> {
        self.table.find_label(label).map(|i| self.values[i])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    fn check_same(&self, other: &ClassFunction) -> Result<()> {
        if !Arc::ptr_eq(&self.table, &other.table) && self.table.group() != other.table.group() {
            return Err(Error::Domain("class functions of different groups".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(ClassFunction {
            table: self.table.clone(),
            values,
        })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(ClassFunction {
            table: self.table.clone(),
            values,
        })
    }

    /// One line per class: label, class size, value.
    pub fn to_table(&self) -> String {
        let labels: Vec<String> = self.table.classes().iter().map(|c| c.label()).collect();
        let w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{:<w$}  {:>8}  {:>8}", "class", "size", "value");
        for ((l, c), v) in labels.iter().zip(self.table.classes()).zip(&self.values) {
            let pad = w - l.chars().count();
            let _ = writeln!(out, "{l}{}  {:>8}  {:>8}", " ".repeat(pad), c.size, v);
        }
        out
    }

    pub fn to_json(&self) -> ClassFunctionJson {
        ClassFunctionJson {
            classes: self
                .table
                .classes()
                .iter()
                .zip(&self.values)
                .enumerate()
                .map(|(index, (c, &value))| ClassValue {
                    index,
                    label: c.label(),
                    size: c.size,
                    value,
                })
                .collect(),
        }
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.check_same(other).is_ok() && self.values == other.values
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassValue {
    pub index: usize,
    pub label: String,
    pub size: u64,
    pub value: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassFunctionJson {
    pub classes: Vec<ClassValue>,
}
