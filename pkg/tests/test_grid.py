"""Grid functions, even measures, and their file formats."""

import numpy as np
import pytest

from fourierjacobi import (
    DomainError,
    EvenMeasure,
    GridFunction,
    JacobiParams,
    QuadratureSpec,
    gaussian_bump,
)


class TestGridFunction:
    def test_even_evaluation(self):
        f = gaussian_bump(4.0, 129, width=0.7, center=1.0)
        assert f(-1.3) == pytest.approx(f(1.3))

    def test_beyond_tmax_rejected(self):
        f = gaussian_bump(4.0, 129)
        with pytest.raises(DomainError):
            f(4.5)

    def test_linear_vs_cubic_agree_on_nodes(self):
        vals = np.cos(np.linspace(0, 3, 65))
        lin = GridFunction(3.0, vals, "linear")
        cub = GridFunction(3.0, vals, "cubic")
        for t in lin.ts[::8]:
            assert lin(t) == pytest.approx(cub(t), abs=1e-12)

    def test_too_few_samples_rejected(self):
        with pytest.raises(DomainError):
            GridFunction(1.0, np.ones(8))

    def test_nonfinite_rejected(self):
        vals = np.ones(32)
        vals[3] = np.nan
        with pytest.raises(DomainError):
            GridFunction(1.0, vals)

    def test_csv_roundtrip(self, tmp_path):
        f = gaussian_bump(5.0, 65, width=1.2)
        path = tmp_path / "f.csv"
        f.to_csv(path)
        g = GridFunction.from_csv(path)
        assert g.tmax == f.tmax
        assert np.allclose(g.values, f.values)

    def test_csv_bad_header_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("x,y,z\n0,1,0\n")
        with pytest.raises(DomainError):
            GridFunction.from_csv(path)

    def test_csv_nonuniform_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        rows = ["t,re,im"] + [f"{t},1,0" for t in np.linspace(0, 1, 20) ** 2]
        path.write_text("\n".join(rows) + "\n")
        with pytest.raises(DomainError):
            GridFunction.from_csv(path)


class TestQuadratureSpec:
    def test_defaults_valid(self):
        spec = QuadratureSpec()
        assert spec.method == "gauss-legendre-composite"

    def test_unknown_method_rejected(self):
        with pytest.raises(DomainError):
            QuadratureSpec(method="monte-carlo")

    def test_bad_tolerance_rejected(self):
        with pytest.raises(DomainError):
            QuadratureSpec(abs_tol=0.0)


class TestEvenMeasure:
    def test_reach(self):
        mu = EvenMeasure(atoms=[(1.0, 0.5), (2.5, 0.5)])
        assert mu.reach == 2.5
        assert EvenMeasure(atom0=1.0).reach == 0.0

    def test_atom_validation(self):
        with pytest.raises(DomainError):
            EvenMeasure(atoms=[(-1.0, 1.0)])
        with pytest.raises(DomainError):
            EvenMeasure(atoms=[(1.0, 0.5), (1.0, 0.5)])

    def test_total_mass_atoms(self):
        mu = EvenMeasure(atom0=0.25, atoms=[(1.0, 0.75)])
        assert complex(mu.total_mass()) == pytest.approx(1.0)

    def test_total_mass_with_density(self):
        dens = GridFunction(2.0, np.full(33, 0.25))
        mu = EvenMeasure(density=dens)  # 2 * 0.25 * 2 = 1
        assert complex(mu.total_mass(JacobiParams(0.5, -0.5))) == pytest.approx(1.0)

    def test_json_roundtrip(self, tmp_path):
        dens = gaussian_bump(1.5, 33, width=0.5)
        mu = EvenMeasure(atom0=0.1, atoms=[(1.0, 0.4)], density=dens,
                         density_measure="delta-weighted")
        path = tmp_path / "mu.json"
        mu.to_json(path, tmp_path / "dens.csv")
        back = EvenMeasure.from_json(path)
        assert back.atom0 == mu.atom0
        assert back.atoms == mu.atoms
        assert back.density_measure == "delta-weighted"
        assert np.allclose(back.density.values, dens.values)

    def test_density_without_sidecar_rejected(self, tmp_path):
        mu = EvenMeasure(density=gaussian_bump(1.0, 33))
        with pytest.raises(DomainError):
            mu.to_json(tmp_path / "mu.json")
