import math

import pytest
from numpy.testing import assert_allclose

from rfvlc.errors import DegenerateGeometryError
from rfvlc.geometry import (
    AnglePair,
    Position,
    azimuth_for_offset,
    bearing_deg,
    distance,
    link_angles,
    wrap_angle_deg,
)


def test_wrap_angle_half_open_interval():
    assert wrap_angle_deg(0.0) == 0.0
    assert wrap_angle_deg(190.0) == -170.0
    assert wrap_angle_deg(-190.0) == 170.0
    assert wrap_angle_deg(180.0) == -180.0
    assert wrap_angle_deg(-180.0) == -180.0
    assert wrap_angle_deg(540.0) == -180.0
    assert wrap_angle_deg(359.0) == -1.0


def test_distance_pythagorean():
    assert distance(Position(0.0, 0.0), Position(3.0, 4.0)) == 5.0


def test_bearing_cardinal_directions():
    origin = Position(0.0, 0.0)
    assert bearing_deg(origin, Position(1.0, 0.0)) == 0.0
    assert bearing_deg(origin, Position(0.0, 1.0)) == 90.0
    assert bearing_deg(origin, Position(-1.0, 0.0)) == 180.0
    assert bearing_deg(origin, Position(0.0, -1.0)) == -90.0


def test_coincident_points_raise():
    p = Position(2.5, -1.0)
    with pytest.raises(DegenerateGeometryError):
        bearing_deg(p, Position(2.5, -1.0))
    with pytest.raises(DegenerateGeometryError):
        link_angles(p, 0.0, Position(2.5, -1.0), 0.0)


def test_boresight_alignment_gives_zero_offsets():
    tx = Position(0.0, 0.0)
    rx = Position(1.0, 0.0)
    angles = link_angles(tx, 0.0, rx, 180.0)
    assert angles == AnglePair(0.0, 0.0)


def test_azimuth_offset_round_trip():
    tx = Position(0.0, 0.0)
    rx = Position(3.0, -4.0)
    for phi in (-170.0, -90.0, -30.5, 0.0, 12.25, 60.0, 89.0, 150.0):
        for psi in (-150.0, -60.0, 0.0, 45.0, 170.0):
            az_tx = azimuth_for_offset(tx, rx, phi)
            az_rx = azimuth_for_offset(rx, tx, psi)
            got = link_angles(tx, az_tx, rx, az_rx)
            assert_allclose((got.phi_deg, got.psi_deg), (phi, psi), atol=1e-12)


def test_cross_link_angles_in_parallel_layout():
    # Pair geometry (d_TR=1, d_P=2) with both pairs aligned to their own
    # LOS: the interfering transmitter sits atan2(2, 1) off the victim
    # receiver's boresight on both ends of the diagonal.
    tx2 = Position(0.0, 2.0)
    rx2 = Position(1.0, 2.0)
    rx1 = Position(1.0, 0.0)
    tx1 = Position(0.0, 0.0)
    az_tx2 = azimuth_for_offset(tx2, rx2, 0.0)
    az_rx1 = azimuth_for_offset(rx1, tx1, 0.0)
    cross = link_angles(tx2, az_tx2, rx1, az_rx1)
    expected = math.degrees(math.atan2(2.0, 1.0))
    assert_allclose(cross.phi_deg, expected, rtol=1e-12)
    assert_allclose(cross.psi_deg, expected, rtol=1e-12)
    assert_allclose(distance(tx2, rx1), math.sqrt(5.0), rtol=1e-15)


def test_offsets_are_signed_and_wrapped():
    tx = Position(0.0, 0.0)
    rx = Position(1.0, 0.0)
    angles = link_angles(tx, 30.0, rx, -180.0 + 40.0)
    assert_allclose(angles.phi_deg, 30.0, atol=1e-12)
    assert_allclose(angles.psi_deg, 40.0, atol=1e-12)
    angles = link_angles(tx, -45.0, rx, 170.0)
    assert_allclose(angles.phi_deg, -45.0, atol=1e-12)
    assert_allclose(angles.psi_deg, -10.0, atol=1e-12)
