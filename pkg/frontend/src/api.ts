/** Typed client for the screening service's /api/v1 endpoints. */

export type FeatureKind = "binary" | "ordinal" | "continuous" | "categorical";

export interface FeatureSpec {
    name: string;
    kind: FeatureKind;
    bounds: [number, number];
    required: boolean;
    integer: boolean;
    prompt: string;
    codes?: Record<string, number>;
    aliases?: Record<string, number>;
}

export interface QuestionnaireSchema {
    features: FeatureSpec[];
    labels: Array<{ code: number; name: string }>;
}

export interface AssessmentResult {
    assessment_id: string;
    label: { code: number; name: string };
    disclaimer: string;
    model_kind: string;
    timestamp: string;
}

export interface FieldError {
    feature: string;
    message: string;
    value?: unknown;
}

export interface ConsentOutcome {
    assessment_id: string;
    agreed: boolean;
    route: string | null;
}

export interface TherapyItem {
    title: string;
    description: string;
    kind: string;
    link: string | null;
}

export interface VcbtCatalog {
    disorder: string;
    items: TherapyItem[];
}

/** Server rejected the answers; one entry per offending feature. */
export class AnswerRejection extends Error {
    constructor(public readonly errors: FieldError[]) {
        super(errors.map(e => `${e.feature}: ${e.message}`).join("; "));
    }
}

/** Consent was already recorded for this assessment (HTTP 409). */
export class ConsentConflict extends Error {
    constructor(assessmentId: string) {
        super(`consent already recorded for ${assessmentId}`);
    }
}

export class HttpError extends Error {
    constructor(public readonly status: number, message: string) {
        super(message);
    }
}

async function errorBody(response: Response): Promise<string> {
    try {
        const body = await response.json();
        return typeof body.detail === "string" ? body.detail : response.statusText;
    } catch {
        return response.statusText;
    }
}

export class ApiClient {
    constructor(private readonly base: string = "") {}

    private url(path: string): string {
        return `${this.base}/api/v1${path}`;
    }

    async schema(): Promise<QuestionnaireSchema> {
        const response = await fetch(this.url("/schema"));
        if (!response.ok) throw new HttpError(response.status, await errorBody(response));
        return response.json();
    }

    async assess(answers: Record<string, number>,
                 idempotencyKey?: string): Promise<AssessmentResult> {
        const response = await fetch(this.url("/assessments"), {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ answers, idempotency_key: idempotencyKey ?? null }),
        });
        if (response.status === 422) {
            const body = await response.json();
            throw new AnswerRejection(body.errors ?? []);
        }
        if (!response.ok) throw new HttpError(response.status, await errorBody(response));
        return response.json();
    }

    async consent(assessmentId: string, agreed: boolean): Promise<ConsentOutcome> {
        const response = await fetch(
            this.url(`/assessments/${encodeURIComponent(assessmentId)}/consent`), {
                method: "POST",
                headers: { "Content-Type": "application/json" },
                body: JSON.stringify({ agreed }),
            });
        if (response.status === 409) throw new ConsentConflict(assessmentId);
        if (!response.ok) throw new HttpError(response.status, await errorBody(response));
        return response.json();
    }

    async catalog(disorder: string): Promise<VcbtCatalog> {
        const response = await fetch(this.url(`/vcbt/${encodeURIComponent(disorder)}`));
        if (!response.ok) throw new HttpError(response.status, await errorBody(response));
        return response.json();
    }
}
