#!/usr/bin/env python3
"""
Unit Tests for corrcli.category (skeletal backend and loader)

Tests skeletal ribbon categories including:
- Hom-space dimensions from fusion rules
- Twists and braidings on bundled data
- Loader errors and constructions (Deligne product, modular data)

Version: 1.0.0
"""

import json
import pytest

from corrcli.category import (
    deligne_product,
    gauss_sums,
    global_dimension_squared,
    load_category,
    modular_data,
    product_label,
    reverse,
)
from corrcli.core.errors import DataFormatError, UnknownAtom
from corrcli.scalars import Matrix


# ============================================================================
# Test Hom-Spaces
# ============================================================================

class TestHomSpaces:
    """Tests for hom_space dimensions."""

    @pytest.mark.unit
    def test_vect_unit(self, vect):
        assert vect.hom_dim(vect.unit(), vect.unit()) == 1

    @pytest.mark.unit
    @pytest.mark.parametrize("labels,expected", [
        (("e", "e"), 1),
        (("e", "m"), 0),
        (("f", "f"), 1),
        (("e", "m", "f"), 1),
    ])
    def test_toric_invariants(self, toric, labels, expected):
        assert toric.hom_dim(toric.unit(), toric.obj(*labels)) == expected

    @pytest.mark.unit
    def test_fibonacci_tau_cubed(self, data_dir):
        fib = load_category(data_dir / "fib.json")
        # t x t x t = 1 + 2t, so Hom(t, t^3) is two-dimensional
        assert fib.hom_dim(fib.obj("t"), fib.obj("t", "t", "t")) == 2

    @pytest.mark.unit
    def test_unknown_label(self, toric):
        with pytest.raises(UnknownAtom):
            toric.obj("x")


# ============================================================================
# Test Ribbon Structure
# ============================================================================

class TestRibbonStructure:
    """Tests for twists, braidings and duality."""

    @pytest.mark.unit
    def test_fermion_twist(self, toric):
        f = toric.obj("f")
        assert toric.twist(f).block("f") == Matrix.from_rows([[-1]])

    @pytest.mark.unit
    def test_double_braiding_of_e_and_m(self, toric):
        e, m = toric.obj("e"), toric.obj("m")
        monodromy = toric.compose(toric.braiding(m, e), toric.braiding(e, m))
        assert monodromy.block("f") == Matrix.from_rows([[-1]])

    @pytest.mark.unit
    def test_braiding_inverse(self, toric):
        e, m = toric.obj("e"), toric.obj("m")
        round_trip = toric.compose(toric.braiding_inv(e, m), toric.braiding(e, m))
        assert round_trip.equals_matrixwise(toric.identity(toric.obj("e", "m")))

    @pytest.mark.unit
    def test_zigzag(self, toric):
        X = toric.obj("m")
        zigzag = toric.chain(toric.tensor(toric.coev(X), toric.identity(X)),
                             toric.tensor(toric.identity(X), toric.ev(X)))
        assert zigzag.equals_matrixwise(toric.identity(X))


# ============================================================================
# Test Loader
# ============================================================================

class TestLoader:
    """Tests for load_category."""

    @pytest.mark.unit
    def test_bundled_names(self, toric, vect, dz2_hopf):
        assert (toric.name, toric.backend) == ("toric", "skeletal")
        assert vect.simples == ["1"]
        assert dz2_hopf.backend == "hopf"

    @pytest.mark.unit
    def test_unsupported_format_version(self, data_dir, temp_dir):
        doc = json.loads((data_dir / "toric.json").read_text())
        doc["format_version"] = 99
        path = temp_dir / "toric.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(DataFormatError):
            load_category(path)

    @pytest.mark.unit
    def test_missing_file(self, temp_dir):
        with pytest.raises(DataFormatError):
            load_category(temp_dir / "missing.json")

    @pytest.mark.unit
    def test_dual_must_be_an_involution(self, data_dir, temp_dir):
        doc = json.loads((data_dir / "toric.json").read_text())
        doc["duals"]["e"] = "m"
        path = temp_dir / "broken.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(DataFormatError):
            load_category(path)


# ============================================================================
# Test Constructions
# ============================================================================

class TestConstructions:
    """Tests for modular data and products."""

    @pytest.mark.unit
    def test_toric_modular_data(self, toric):
        plus, minus = gauss_sums(toric)
        assert global_dimension_squared(toric) == 4
        assert plus == 2 and minus == 2
        assert modular_data(toric)["s_rank"] == 4

    @pytest.mark.unit
    def test_symmetric_category_has_degenerate_s(self, data_dir):
        rep = load_category(data_dir / "rep_z2_symmetric.json")
        assert modular_data(rep)["s_rank"] == 1

    @pytest.mark.unit
    def test_deligne_product_simples(self, toric, vect):
        product = deligne_product(toric, vect, "toric_vect")
        assert len(product.simples) == 4
        assert product_label("e", "1") in product.simples
        assert product.factors is not None

    @pytest.mark.unit
    def test_reverse_inverts_twists(self, data_dir):
        fib = load_category(data_dir / "fib.json")
        rev = reverse(fib)
        assert rev.topological_twist("t") == fib.topological_twist("t").inverse()
