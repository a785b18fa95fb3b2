"""Friis received power and sensitivity checks."""

from __future__ import annotations

import math
from dataclasses import dataclass

from aerolink.errors import ModelDomainError

TN_SENSITIVITY_DBM = -100.0
NTN_SENSITIVITY_DBM = -102.4


@dataclass(frozen=True)
class RadioTerminal:
    """Both ends of the link in one record.

    Bandwidth and subcarrier spacing are informational; they pin the
    sensitivity figure but do not enter any computation.
    """

    tx_power_dBm: float = 23.0
    tx_gain_dBi: float = 0.0
    rx_gain_dBi: float = 8.0
    sensitivity_dBm: float = TN_SENSITIVITY_DBM
    bandwidth_MHz: float = 5.0
    scs_kHz: float = 15.0

    def __post_init__(self):
        problems = self.problems()
        if problems:
            raise ModelDomainError("; ".join(problems))

    def problems(self) -> list[str]:
        out = []
        for name in ("tx_power_dBm", "tx_gain_dBi", "rx_gain_dBi", "sensitivity_dBm"):
            if not math.isfinite(getattr(self, name)):
                out.append(f"{name} must be finite")
        return out


@dataclass(frozen=True)
class LinkBudgetResult:
    rssi_dBm: float
    antenna_gain_dB: float
    path_loss_dB: float
    margin_dB: float
    covered: bool


def received_power(terminal: RadioTerminal, antenna_gain_dB: float, path_loss_dB: float) -> float:
    return (
        terminal.tx_power_dBm
        + terminal.tx_gain_dBi
        + terminal.rx_gain_dBi
        + antenna_gain_dB
        - path_loss_dB
    )


def coverage_verdict(rssi_dBm: float, sensitivity_dBm: float) -> tuple[bool, float]:
    """Return ``(covered, margin_dB)``; a link exactly at sensitivity is covered."""
    margin = rssi_dBm - sensitivity_dBm
    return bool(rssi_dBm >= sensitivity_dBm), margin


def evaluate_link_budget(
    terminal: RadioTerminal, antenna_gain_dB: float, path_loss_dB: float
) -> LinkBudgetResult:
    rssi = received_power(terminal, antenna_gain_dB, path_loss_dB)
    covered, margin = coverage_verdict(rssi, terminal.sensitivity_dBm)
    return LinkBudgetResult(
        rssi_dBm=rssi,
        antenna_gain_dB=antenna_gain_dB,
        path_loss_dB=path_loss_dB,
        margin_dB=margin,
        covered=covered,
    )
