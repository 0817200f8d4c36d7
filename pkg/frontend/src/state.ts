/** Wizard state with sessionStorage persistence (resumable within a tab). */

import type { AssessmentResult } from "./api.js";

export interface WizardState {
    step: number;
    answers: Record<string, number>;
    result: AssessmentResult | null;
    consent: boolean | null;
}

const STORAGE_KEY = "mindscreen-wizard";

export function freshState(): WizardState {
    return { step: 0, answers: {}, result: null, consent: null };
}

export function loadState(): WizardState {
    try {
        const raw = sessionStorage.getItem(STORAGE_KEY);
        if (!raw) return freshState();
        const parsed = JSON.parse(raw);
        return {
            step: typeof parsed.step === "number" ? parsed.step : 0,
            answers: parsed.answers ?? {},
            result: parsed.result ?? null,
            consent: parsed.consent ?? null,
        };
    } catch {
        return freshState();
    }
}

export function saveState(state: WizardState): void {
    sessionStorage.setItem(STORAGE_KEY, JSON.stringify(state));
}

export function clearState(): void {
    sessionStorage.removeItem(STORAGE_KEY);
}
