"""Space-filling designs."""
