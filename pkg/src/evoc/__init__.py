"""Agent-based cultural evolution of actions on a grid: invention, imitation, and creator/imitator sweeps."""

__version__ = "0.1.0"
