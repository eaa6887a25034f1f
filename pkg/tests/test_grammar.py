"""Tests for the generator expression grammar."""

import math

import pytest

from schwarzlab.families import (
    B2Extremal,
    CayleyOfSchwarz,
    FiniteBlaschke,
    HerglotzAtoms,
    InverseCayley,
    MonomialRotation,
)
from schwarzlab.grammar import GeneratorParseError, parse_generator


def test_monomial():
    g = parse_generator("monomial(k=3, theta=0.5)")
    assert g == MonomialRotation(k=3, theta=0.5)


def test_pi_and_arithmetic():
    g = parse_generator("monomial(k=2, theta=2*pi/5)")
    assert g.theta == pytest.approx(2 * math.pi / 5)


def test_extremal_complex_literal_with_i_suffix():
    g = parse_generator("extremal1(b1=0.5+0.25i, theta=-pi/3)")
    assert isinstance(g, B2Extremal)
    assert g.b1 == 0.5 + 0.25j
    assert g.theta == pytest.approx(-math.pi / 3)


def test_j_suffix_and_bare_unit():
    g = parse_generator("blaschke(phi=0, m=1, zeros=[0.25j, 0.5*i, -0.1])")
    assert g.zeros == (0.25j, 0.5j, -0.1 + 0j)


def test_blaschke_worked_example():
    g = parse_generator("blaschke(phi=pi, m=1, zeros=[0.5])")
    assert isinstance(g, FiniteBlaschke)
    assert g.phi == pytest.approx(math.pi)
    assert g.m == 1 and g.zeros == (0.5 + 0j,)


def test_herglotz_atoms():
    g = parse_generator("herglotz(atoms=[(0.5, 0), (0.5, pi)])")
    assert isinstance(g, HerglotzAtoms)
    assert g.atoms[0] == (0.5, 0.0)
    assert g.atoms[1][1] == pytest.approx(math.pi)


def test_nested_cayley_positional_inner():
    g = parse_generator("cayley(theta=0, blaschke(phi=pi, m=1, zeros=[0.5]))")
    assert isinstance(g, CayleyOfSchwarz)
    assert isinstance(g.inner, FiniteBlaschke)


def test_nested_invcayley_keyword_inner():
    g = parse_generator("invcayley(theta=1.0, inner=herglotz(atoms=[(1, 0.3)]))")
    assert isinstance(g, InverseCayley)
    assert isinstance(g.inner, HerglotzAtoms)


def test_deep_nesting():
    g = parse_generator(
        "invcayley(theta=0.2, cayley(theta=0.1, monomial(k=1, theta=0)))"
    )
    assert isinstance(g.inner, CayleyOfSchwarz)
    assert isinstance(g.inner.inner, MonomialRotation)


def test_power_operator_and_parens():
    g = parse_generator("monomial(k=1, theta=(1+1)**2/4)")
    assert g.theta == pytest.approx(1.0)


@pytest.mark.parametrize(
    "text",
    [
        "bogus(k=1)",
        "monomial(k=1",
        "monomial(k=1, theta=0) trailing",
        "monomial(k=0.5, theta=0)",
        "monomial(theta=0)",
        "extremal1(b1=0.5, theta=i)",
        "cayley(theta=0, herglotz(atoms=[(1,0)]))",
        "invcayley(theta=0, monomial(k=1, theta=0))",
        "herglotz(atoms=[(1, 0, 3)])",
        "herglotz(atoms=0.5)",
        "monomial(k=1, theta=1/0)",
        "monomial(k=1, theta=0, extra=2)",
        "0.5 + 2",
        "monomial(k=1, k=2, theta=0)",
        "blaschke(phi=0, m=1, zeros=0.5)",
    ],
)
def test_rejects_malformed(text):
    with pytest.raises(GeneratorParseError):
        parse_generator(text)


def test_class_partition():
    schwarz = [
        "monomial(k=1, theta=0)",
        "extremal1(b1=0.1, theta=0)",
        "blaschke(phi=0, m=2, zeros=[])",
        "invcayley(theta=0, herglotz(atoms=[(1, 0)]))",
    ]
    cara = [
        "herglotz(atoms=[(1, 0)])",
        "cayley(theta=0, monomial(k=1, theta=0))",
    ]
    for text in schwarz:
        g = parse_generator(text)
        assert isinstance(g, (MonomialRotation, B2Extremal, FiniteBlaschke, InverseCayley))
    for text in cara:
        g = parse_generator(text)
        assert isinstance(g, (HerglotzAtoms, CayleyOfSchwarz))
