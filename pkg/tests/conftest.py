import pytest

from mindscreen.bundle import train_bundle
from mindscreen.schema import builtin_schema
from mindscreen.synth import generate_separable


@pytest.fixture(scope="session")
def schema():
    return builtin_schema()


@pytest.fixture(scope="session")
def separable_cohort():
    return generate_separable(90, seed=3)


@pytest.fixture(scope="session")
def knn_bundle(separable_cohort):
    return train_bundle(separable_cohort, "knn", knn_k=3, seed=11)


@pytest.fixture()
def valid_answers():
    return {
        "age": 23,
        "sex": "male",
        "literacy": "literate",
        "marital_status": "unmarried",
        "children": "no",
        "employed": 1,
        "socio_economic_status": 3,
        "drug_addiction": 0,
        "chronic_disease": 0,
        "medication": 0,
        "education": 2,
        "financial_status": 5,
        "income": 15000,
        "sleeping_hour": 7,
        "result_satisfaction": "yes",
        "feelings_of_overwhelm": "no",
        "extracurricular_activities": 1,
        "hangout_hours": 2,
    }
