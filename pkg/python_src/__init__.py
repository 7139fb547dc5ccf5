"""Normative compliance checking over RDF graphs with SHACL shapes and rules."""
