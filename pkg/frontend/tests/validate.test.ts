import { describe, expect, it } from "vitest";

import { codeName, validateAnswer } from "../src/validate.js";
import { SCHEMA } from "./fixtures.js";

const spec = (name: string) => SCHEMA.features.find(f => f.name === name)!;

describe("validateAnswer", () => {
    it("accepts in-bounds numbers", () => {
        expect(validateAnswer(spec("sleeping_hour"), "7.5")).toEqual({ ok: true, value: 7.5 });
        expect(validateAnswer(spec("age"), "23")).toEqual({ ok: true, value: 23 });
    });

    it("rejects out-of-bounds sleeping hours", () => {
        const verdict = validateAnswer(spec("sleeping_hour"), "30");
        expect(verdict.ok).toBe(false);
        if (!verdict.ok) expect(verdict.message).toContain("between 0 and 24");
    });

    it("rejects fractional answers for whole-number features", () => {
        expect(validateAnswer(spec("age"), "23.4").ok).toBe(false);
        expect(validateAnswer(spec("education"), "2.5").ok).toBe(false);
    });

    it("rejects missing and non-numeric input", () => {
        expect(validateAnswer(spec("income"), "").ok).toBe(false);
        expect(validateAnswer(spec("income"), null).ok).toBe(false);
        expect(validateAnswer(spec("income"), "lots").ok).toBe(false);
    });

    it("accepts only assigned category codes", () => {
        expect(validateAnswer(spec("marital_status"), "3")).toEqual({ ok: true, value: 3 });
        expect(validateAnswer(spec("marital_status"), "2").ok).toBe(false);
        expect(validateAnswer(spec("sex"), "1")).toEqual({ ok: true, value: 1 });
    });

    it("maps codes back to their names", () => {
        expect(codeName(spec("sex"), 0)).toBe("female");
        expect(codeName(spec("marital_status"), 3)).toBe("divorced");
    });
});
