# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from dataclasses import dataclass


@dataclass(frozen=True)
class Crossing:
    """A crossing of an upright diagram.

    Parameters
    ----------
    sign: int
        +1 or -1.
    i: int
        Label of the strand entering the crossing as the over strand.
    j: int
        Label of the strand entering the crossing as the under strand.
    ip: int
        Label of the strand leaving the crossing as the continuation of the over strand.
    jp: int
        Label of the strand leaving the crossing as the continuation of the under strand.
    """

    sign: int
    i: int
    j: int
    ip: int
    jp: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign}")

    @property
    def labels(self) -> t.Tuple[int, int, int, int]:
        return self.i, self.j, self.ip, self.jp

    def mirror(self) -> "Crossing":
        return Crossing(-self.sign, self.i, self.j, self.ip, self.jp)

    def relabeled(self, mapping: t.Mapping[int, int]) -> "Crossing":
        return Crossing(
            self.sign, mapping[self.i], mapping[self.j], mapping[self.ip], mapping[self.jp]
        )

    @classmethod
    def fromdict(cls, data_dict: dict) -> "Crossing":
        return cls(
            sign=data_dict["sign"],
            i=data_dict["i"],
            j=data_dict["j"],
            ip=data_dict["ip"],
            jp=data_dict["jp"],
        )

    def asdict(self) -> dict:
        return {"sign": self.sign, "i": self.i, "j": self.j, "ip": self.ip, "jp": self.jp}
