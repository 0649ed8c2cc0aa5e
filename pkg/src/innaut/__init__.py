"""Partial inner automorphisms of finite semigroups."""
