from pfrl import wrappers
