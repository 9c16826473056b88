"""Operator scripts: catalog builders and the soundness sweep."""
