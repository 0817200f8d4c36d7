/** Client-side answer validation mirroring the service's schema rules.
 *  The server re-validates everything; this only exists for instant
 *  feedback and to keep the wizard from advancing on bad input. */

import type { FeatureSpec } from "./api.js";

export type Validation =
    | { ok: true; value: number }
    | { ok: false; message: string };

export function validateAnswer(spec: FeatureSpec, raw: string | number | null): Validation {
    if (raw === null || raw === "") {
        return { ok: false, message: "An answer is required." };
    }
    const value = typeof raw === "number" ? raw : Number(raw);
    if (!Number.isFinite(value)) {
        return { ok: false, message: "Enter a number." };
    }
    if (spec.codes && Object.keys(spec.codes).length > 0) {
        const allowed = Object.values(spec.codes);
        if (!allowed.includes(value)) {
            return { ok: false, message: `Choose one of: ${Object.keys(spec.codes).join(", ")}.` };
        }
        return { ok: true, value };
    }
    const [lo, hi] = spec.bounds;
    if (value < lo || value > hi) {
        return { ok: false, message: `Must be between ${lo} and ${hi}.` };
    }
    if ((spec.kind === "ordinal" || spec.integer) && !Number.isInteger(value)) {
        return { ok: false, message: "Must be a whole number." };
    }
    return { ok: true, value };
}

/** Human-readable name for a code of a binary/categorical feature. */
export function codeName(spec: FeatureSpec, code: number): string {
    for (const [name, value] of Object.entries(spec.codes ?? {})) {
        if (value === code) return name;
    }
    return String(code);
}
