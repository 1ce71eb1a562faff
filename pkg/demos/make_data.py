"""Regenerate the JSON inputs in demos/data used by the CLI examples and tests."""
from pathlib import Path

import numpy as np

from misoshift import fixtures as F, io
from misoshift.oppoly import MatrixPolynomial

DATA = Path(__file__).resolve().parent / "data"

DOCUMENTS = {
    "identity_poly.json": io.polynomial_to_json(MatrixPolynomial.identity(2)),
    "divergent_3x3.json": io.polynomial_to_json(F.divergent_3x3_polynomial()),
    "invertible_2x2.json": io.polynomial_to_json(F.invertible_2x2_polynomial()),
    "dirichlet_weights.json": io.weights_to_json(F.dirichlet_weights(40)),
    "identity_weights.json": io.weights_to_json(F.identity_weights(2, 20)),
    "prefix_scalar.json": io.prefix_to_json([np.array([[2.0]])]),
    "prefix_nonhermitian.json": io.prefix_to_json([np.array([[1.0, 2.0], [0.0, 1.5]])]),
    "prefix_noncommuting.json": io.prefix_to_json(
        [np.array([[2.0, 1.0], [1.0, 2.0]]), np.array([[3.0, 0.0], [0.0, 1.0]])]),
    "prefix_singular.json": io.prefix_to_json([np.array([[1.0, 1.0], [1.0, 1.0]])]),
}

if __name__ == "__main__":
    DATA.mkdir(exist_ok=True)
    for name, doc in DOCUMENTS.items():
        (DATA / name).write_text(io.dumps(doc))
        print("wrote", DATA / name)
