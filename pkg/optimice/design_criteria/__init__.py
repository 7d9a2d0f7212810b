"""Sequential design criteria."""
