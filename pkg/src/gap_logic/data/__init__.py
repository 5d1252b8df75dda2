"""Mitgelieferte Beispieldaten (Standardsystem, Beispielmodelle)."""
