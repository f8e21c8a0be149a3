# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Tabulated weights stored in CSV files.

Requires Pandas for fast IO.

"""
import csv
import os

from atom.api import Atom, Str
from pandas import read_csv

from .weight import InvalidWeightError, WeightSpec


class TableColumnError(KeyError):
    """
    Custom KeyError raised when one required column does not exist
    in the weight table.
    """

    def __init__(self, missing, existing):
        self.missing = missing
        self.existing = existing

    def __str__(self):
        return (
            "The following columns are not present in the weight table: "
            f"{self.missing}. Existing columns are: {self.existing}"
        )


class WeightTableLoader(Atom):
    """Load a tabulated weight from a csv file.

    The file holds one column of abscissae t and one column of weight values.
    The system can automatically strip comment and determine the proper delimiter.

    """

    #: Path to the on-disk file storing the table.
    path = Str()

    #: Column delimiter, an empty string means that the separator
    #: should be inferred
    delimiter = Str("")

    #: Character marking a comment, fully commented lines are ignored
    comment = Str("#")

    #: Name of the column holding the abscissae.
    t_column = Str("t")

    #: Name of the column holding the weight values.
    value_column = Str("omega")

    def determine_columns(self) -> list:
        """Read the header line and return the column names."""
        line = self._header()
        return [n.strip() for n in line.split(self.determine_delimiter(line))]

    def determine_delimiter(self, header: str = "") -> str:
        """Return the delimiter, sniffed from the header line if none is set."""
        if self.delimiter:
            return self.delimiter
        return csv.Sniffer().sniff(header or self._header()).delimiter

    def load(self) -> WeightSpec:
        """Build the tabulated weight.

        Raises
        ------
        TableColumnError
            Raised if the t or omega column is missing.
        InvalidWeightError
            Raised if the tabulated values do not describe a positive weight.

        """
        if not os.path.isfile(self.path):
            raise InvalidWeightError(f"no weight table found at {self.path!r}")

        columns = self.determine_columns()
        required = [self.t_column, self.value_column]
        if any(r not in columns for r in required):
            raise TableColumnError([r for r in required if r not in columns], columns)

        data = read_csv(
            self.path,
            sep=self.determine_delimiter(),
            comment=self.comment,
            skipinitialspace=True,
        )
        data.columns = [str(c).strip() for c in data.columns]
        data = data.dropna(subset=required)
        return WeightSpec.tabulated(
            data[self.t_column].to_numpy(dtype=float),
            data[self.value_column].to_numpy(dtype=float),
            description=self.path,
        )

    # --- Private API

    def _header(self) -> str:
        """First line of the file that is not a comment."""
        with open(self.path, "r") as f:
            line = f.readline()
            while line.strip().startswith(self.comment):
                line = f.readline()
        return line


def load_weight_table(path: str, **kwargs) -> WeightSpec:
    """Load a tabulated weight, see WeightTableLoader for the accepted options."""
    return WeightTableLoader(path=path, **kwargs).load()
