"""Behavioral-disorder screening toolkit.

Questionnaire schema and validation, fitted preprocessing, KNN and linear
SVM classifiers, evaluation reports, synthetic cohorts, and an HTTP
screening service with consent-gated therapy routing.
"""

from .bundle import ModelBundle, load_bundle, save_bundle, train_bundle
from .dataset import Dataset, RespondentRecord, Violation, load_dataset, save_dataset, validate_record
from .evaluation import (
    ClassificationReport,
    ConfusionMatrix,
    aggregate,
    confusion,
    cross_validate,
    evaluate_holdout,
    f1_score,
    kfold_indices,
    report,
    select_model,
    train_test_split,
)
from .knn import KnnModel, euclidean_distance, knn_fit, knn_predict
from .preprocess import (
    FeatureVector,
    PreprocessorModel,
    fit_preprocessor,
    impute,
    normalize_value,
    transform,
)
from .schema import DisorderLabel, FeatureKind, FeatureSpec, Schema, builtin_schema
from .svm import (
    BinarySvmModel,
    MulticlassSvmModel,
    hinge_objective,
    svm_predict,
    svm_train_binary,
    svm_train_multiclass,
)
from .synth import GeneratorConfig, generate, generate_separable

__version__ = "0.1.0"
