"""Run configuration for the ring invariants toolkit."""
