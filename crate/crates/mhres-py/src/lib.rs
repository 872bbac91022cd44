//! Python bindings (placeholder until the core API is complete).

use pyo3::prelude::*;

#[pymodule]
fn mhres_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
