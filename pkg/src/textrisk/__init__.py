"""Corporate distress prediction from annual-report text segments.

A self-contained library: text preprocessing, skip-gram embeddings, a
convolutional-recurrent attention classifier with hand-written gradients,
classical baselines, a grouped cross-validation harness, and attention
heatmap reporting.
"""

__version__ = "0.1.0"

from textrisk.errors import ConfigError, DataError, NumericError

__all__ = ["ConfigError", "DataError", "NumericError", "__version__"]
