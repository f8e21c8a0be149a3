# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Numerical toolkit for weighted Bergman spaces of Jordan domains and the weighted
Cauchy transform.

"""
