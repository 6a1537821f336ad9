"""Domain layer - scenario model, queues, channels and analytical delay formulas."""
