/** Frozen copy of the service's GET /api/v1/schema payload plus
 *  canned responses for the other endpoints. */

import type { AssessmentResult, QuestionnaireSchema, VcbtCatalog } from "../src/api.js";

export const SCHEMA: QuestionnaireSchema = {
    "features": [
        {
            "name": "age",
            "kind": "continuous",
            "bounds": [
                15,
                80
            ],
            "required": true,
            "integer": true,
            "prompt": "Age in years"
        },
        {
            "name": "sex",
            "kind": "binary",
            "bounds": [
                0,
                1
            ],
            "required": true,
            "integer": false,
            "prompt": "Sex",
            "codes": {
                "female": 0,
                "male": 1
            }
        },
        {
            "name": "literacy",
            "kind": "binary",
            "bounds": [
                0,
                1
            ],
            "required": true,
            "integer": false,
            "prompt": "Literate (minimum higher secondary school or equivalent)?",
            "codes": {
                "illiterate": 0,
                "literate": 1
            },
            "aliases": {
                "no": 0,
                "yes": 1
            }
        },
        {
            "name": "marital_status",
            "kind": "categorical",
            "bounds": [
                0,
                3
            ],
            "required": true,
            "integer": false,
            "prompt": "Marital status",
            "codes": {
                "married": 0,
                "unmarried": 1,
                "divorced": 3
            }
        },
        {
            "name": "children",
            "kind": "binary",
            "bounds": [
                0,
                1
            ],
            "required": true,
            "integer": false,
            "prompt": "Do you have children?",
            "codes": {
                "no": 0,
                "yes": 1
            }
        },
        {
            "name": "employed",
            "kind": "binary",
            "bounds": [
                0,
                1
            ],
            "required": true,
            "integer": false,
            "prompt": "Are you employed?",
            "codes": {
                "unemployed": 0,
                "employed": 1
            },
            "aliases": {
                "no": 0,
                "yes": 1
            }
        },
        {
            "name": "socio_economic_status",
            "kind": "ordinal",
            "bounds": [
                1,
                5
            ],
            "required": true,
            "integer": true,
            "prompt": "Socio-economic status (1 poor .. 5 self-sufficient)"
        },
        {
            "name": "drug_addiction",
            "kind": "binary",
            "bounds": [
                0,
                1
            ],
            "required": true,
            "integer": false,
            "prompt": "Any drug addiction?",
            "codes": {
                "no": 0,
                "yes": 1
            }
        },
        {
            "name": "chronic_disease",
            "kind": "binary",
            "bounds": [
                0,
                1
            ],
            "required": true,
            "integer": false,
            "prompt": "Any chronic disease?",
            "codes": {
                "no": 0,
                "yes": 1
            }
        },
        {
            "name": "medication",
            "kind": "binary",
            "bounds": [
                0,
                1
            ],
            "required": true,
            "integer": false,
            "prompt": "Currently on medication?",
            "codes": {
                "no": 0,
                "yes": 1
            }
        },
        {
            "name": "education",
            "kind": "ordinal",
            "bounds": [
                1,
                5
            ],
            "required": true,
            "integer": true,
            "prompt": "Education (1 primary diploma, 2 HSC/A-level, 3 B.Sc., 4 Masters, 5 PhD)"
        },
        {
            "name": "financial_status",
            "kind": "ordinal",
            "bounds": [
                0,
                10
            ],
            "required": true,
            "integer": true,
            "prompt": "Financial status (0 poor .. 10 highly rich)"
        },
        {
            "name": "income",
            "kind": "continuous",
            "bounds": [
                0,
                500000
            ],
            "required": true,
            "integer": false,
            "prompt": "Monthly income in BDT"
        },
        {
            "name": "sleeping_hour",
            "kind": "continuous",
            "bounds": [
                0,
                24
            ],
            "required": true,
            "integer": false,
            "prompt": "Sleeping hours per day (0-24)"
        },
        {
            "name": "result_satisfaction",
            "kind": "binary",
            "bounds": [
                0,
                1
            ],
            "required": true,
            "integer": false,
            "prompt": "Satisfied with your academic results?",
            "codes": {
                "no": 0,
                "yes": 1
            }
        },
        {
            "name": "feelings_of_overwhelm",
            "kind": "binary",
            "bounds": [
                0,
                1
            ],
            "required": true,
            "integer": false,
            "prompt": "Frequent feelings of overwhelm?",
            "codes": {
                "no": 0,
                "yes": 1
            }
        },
        {
            "name": "extracurricular_activities",
            "kind": "binary",
            "bounds": [
                0,
                1
            ],
            "required": true,
            "integer": false,
            "prompt": "Involved in extracurricular activities?",
            "codes": {
                "no": 0,
                "yes": 1
            }
        },
        {
            "name": "hangout_hours",
            "kind": "ordinal",
            "bounds": [
                0,
                10
            ],
            "required": true,
            "integer": true,
            "prompt": "Hangout with friends, hours per day (\"No\" or 1-10)",
            "aliases": {
                "no": 0
            }
        }
    ],
    "labels": [
        {
            "code": 1,
            "name": "depression"
        },
        {
            "code": 2,
            "name": "internet_addiction"
        },
        {
            "code": 3,
            "name": "anxiety"
        }
    ]
};

export const RESULT: AssessmentResult = {
    assessment_id: "a1b2c3d4",
    label: { code: 2, name: "internet_addiction" },
    disclaimer: "This screening result is not an exact diagnosis and is not "
        + "100% accurate. It only indicates a likely condition; please consult "
        + "a qualified mental health professional for an actual diagnosis and "
        + "treatment.",
    model_kind: "knn",
    timestamp: "2026-01-01T00:00:00+00:00",
};

export const CATALOGS: Record<string, VcbtCatalog> = {
    depression: {
        disorder: "depression",
        items: [
            { title: "Music therapy", description: "Curated calming music sessions to reduce stress.", kind: "audio", link: null },
            { title: "Job circulars", description: "Current job postings to help land a new job.", kind: "reading", link: null },
            { title: "Local support groups", description: "References to support groups in the local community to join.", kind: "referral", link: null },
            { title: "Physical exercise program", description: "Guided exercise videos and trainer advice.", kind: "video", link: null },
            { title: "Healthy food and lifestyle guide", description: "Expert guidance on healthy meals and daily routine.", kind: "reading", link: null },
            { title: "Antidepressant medication advice", description: "Professional advice on antidepressant medication.", kind: "referral", link: null },
        ],
    },
    internet_addiction: {
        disorder: "internet_addiction",
        items: [
            { title: "Time with family and friends", description: "Encouragement to enjoy more offline time.", kind: "activity", link: null },
            { title: "Daily internet curfew", description: "Restrict internet usage after a certain time each day.", kind: "activity", link: null },
            { title: "30-minute session limit", description: "Limit each online session to 30 minutes.", kind: "activity", link: null },
            { title: "Travel and fun activities", description: "Guidance on travel and fun with loved ones.", kind: "reading", link: null },
            { title: "Digital priority coaching", description: "Keep focus on study and core deliverables.", kind: "reading", link: null },
        ],
    },
    anxiety: {
        disorder: "anxiety",
        items: [
            { title: "Recommended reading", description: "Good and impactful books with sourcing.", kind: "reading", link: null },
            { title: "Short e-learning course", description: "Short e-learning course references.", kind: "video", link: null },
            { title: "Motivational therapy", description: "Transform negative thoughts into positive thoughts.", kind: "reading", link: null },
            { title: "Relaxation therapy", description: "Mindfulness meditation or yoga and progressive muscle relaxation.", kind: "activity", link: null },
        ],
    },
};

export const VALID_ANSWERS: Record<string, number> = {
    age: 23, sex: 1, literacy: 1, marital_status: 1, children: 0, employed: 1,
    socio_economic_status: 3, drug_addiction: 0, chronic_disease: 0,
    medication: 0, education: 2, financial_status: 5, income: 15000,
    sleeping_hour: 7, result_satisfaction: 1, feelings_of_overwhelm: 0,
    extracurricular_activities: 1, hangout_hours: 2,
};
