"""Planar geometry helpers for transmitter/receiver placement.

All angles in this package are signed degrees in the half-open interval
[-180, 180). A node's pointing direction is stored as an absolute azimuth
measured counterclockwise from the +x axis; the angles that matter to the
channel models (irradiance angle at the transmitter, incidence angle at the
receiver) are offsets between a node's azimuth and the line of sight to its
peer, computed here so channel code never deals with absolute bearings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateGeometryError


@dataclass(frozen=True)
class Position:
    x: float
    y: float


@dataclass(frozen=True)
class AnglePair:
    """Signed offsets from line of sight at both ends of a link.

    ``phi_deg`` is measured at the transmitter between its pointing azimuth
    and the LOS toward the receiver. ``psi_deg`` is measured at the receiver
    between its pointing azimuth and the LOS back toward the transmitter.
    """

    phi_deg: float
    psi_deg: float


def wrap_angle_deg(angle_deg: float) -> float:
    """Wrap an angle to [-180, 180) degrees."""
    return (angle_deg + 180.0) % 360.0 - 180.0


def distance(a: Position, b: Position) -> float:
    return math.hypot(b.x - a.x, b.y - a.y)


def bearing_deg(a: Position, b: Position) -> float:
    """Azimuth of the ray from ``a`` to ``b``, degrees CCW from +x."""
    if a.x == b.x and a.y == b.y:
        raise DegenerateGeometryError(
            f"bearing undefined for coincident points ({a.x}, {a.y})"
        )
    return math.degrees(math.atan2(b.y - a.y, b.x - a.x))


def link_angles(
    tx_pos: Position,
    tx_azimuth_deg: float,
    rx_pos: Position,
    rx_azimuth_deg: float,
) -> AnglePair:
    """Angles either end of the tx->rx link makes with the line of sight.

    Works for any pairing of nodes, so the same routine yields the desired
    link's angles and the cross-link angles between an interfering
    transmitter and a victim receiver.
    """
    los = bearing_deg(tx_pos, rx_pos)
    phi = wrap_angle_deg(tx_azimuth_deg - los)
    reverse_los = wrap_angle_deg(los - 180.0)
    psi = wrap_angle_deg(rx_azimuth_deg - reverse_los)
    return AnglePair(phi_deg=phi, psi_deg=psi)


def azimuth_for_offset(
    node_pos: Position, peer_pos: Position, offset_deg: float
) -> float:
    """Absolute azimuth that realizes ``offset_deg`` from the LOS to a peer.

    Inverse of :func:`link_angles` for one end: pointing a node at this
    azimuth makes its signed LOS offset toward ``peer_pos`` equal exactly
    ``offset_deg``.
    """
    return wrap_angle_deg(bearing_deg(node_pos, peer_pos) + offset_deg)
