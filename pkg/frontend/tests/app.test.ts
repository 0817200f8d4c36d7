import { beforeEach, describe, expect, it } from "vitest";

import type { FeatureSpec } from "../src/api.js";
import { App } from "../src/app.js";
import { CATALOGS, RESULT, SCHEMA, VALID_ANSWERS } from "./fixtures.js";
import { MockClient } from "./mock.js";

const tick = () => new Promise(resolve => setTimeout(resolve, 0));

async function waitFor(predicate: () => boolean, what = "condition"): Promise<void> {
    for (let i = 0; i < 100; i++) {
        if (predicate()) return;
        await tick();
    }
    throw new Error(`timed out waiting for ${what}`);
}

let activeApp: App | null = null;

async function makeApp(client: MockClient = new MockClient()) {
    activeApp?.dispose();  // one live App per (shared) window, as in a browser
    document.body.innerHTML = '<main id="app"></main>';
    const root = document.getElementById("app")!;
    const app = new App(root, client);
    activeApp = app;
    await app.start();
    return { app, root, client };
}

function setControl(root: HTMLElement, spec: FeatureSpec, value: number): void {
    const control = root.querySelector<HTMLInputElement | HTMLSelectElement>(`#${spec.name}`);
    if (!control) throw new Error(`no control for ${spec.name}`);
    if (spec.kind === "binary") {
        const box = control as HTMLInputElement;
        const onCode = Math.max(...Object.values(spec.codes ?? { yes: 1 }));
        box.checked = value === onCode;
        box.dispatchEvent(new Event("change"));
    } else {
        control.value = String(value);
    }
}

async function clickNext(root: HTMLElement): Promise<void> {
    root.querySelector<HTMLButtonElement>("#next")!.click();
    await tick();
}

async function answerStep(root: HTMLElement, index: number, value: number): Promise<void> {
    const spec = SCHEMA.features[index]!;
    setControl(root, spec, value);
    await clickNext(root);
}

async function completeWizard(root: HTMLElement,
                              answers: Record<string, number> = VALID_ANSWERS): Promise<void> {
    for (let i = 0; i < SCHEMA.features.length; i++) {
        await answerStep(root, i, answers[SCHEMA.features[i]!.name]!);
    }
    await waitFor(() => root.querySelector("#result") !== null, "result screen");
}

beforeEach(() => {
    sessionStorage.clear();
    window.location.hash = "";
});

describe("schema-driven wizard", () => {
    it("renders one control per feature, 18 in total", async () => {
        const { root } = await makeApp();
        const seen = new Set<string>();
        for (let i = 0; i < SCHEMA.features.length; i++) {
            const spec = SCHEMA.features[i]!;
            expect(root.textContent).toContain(`Question ${i + 1} of 18`);
            const control = root.querySelector(`#${spec.name}`);
            expect(control, spec.name).not.toBeNull();
            seen.add(spec.name);
            if (i < SCHEMA.features.length - 1) {
                await answerStep(root, i, VALID_ANSWERS[spec.name]!);
            }
        }
        expect(seen.size).toBe(18);
    });

    it("uses the control type implied by the feature kind", async () => {
        const { root, app } = await makeApp();
        expect(root.querySelector("input#age")?.getAttribute("type")).toBe("number");
        app.state.step = SCHEMA.features.findIndex(f => f.name === "sex");
        app.render();
        expect(root.querySelector("input#sex")?.getAttribute("type")).toBe("checkbox");
        app.state.step = SCHEMA.features.findIndex(f => f.name === "marital_status");
        app.render();
        expect(root.querySelector("select#marital_status")).not.toBeNull();
        const options = [...root.querySelectorAll("select#marital_status option")]
            .map(o => o.textContent);
        expect(options).toEqual(["Select…", "married", "unmarried", "divorced"]);
    });

    it("blocks an out-of-bounds sleeping_hour client-side", async () => {
        const { root, app } = await makeApp();
        const index = SCHEMA.features.findIndex(f => f.name === "sleeping_hour");
        for (let i = 0; i < index; i++) {
            await answerStep(root, i, VALID_ANSWERS[SCHEMA.features[i]!.name]!);
        }
        setControl(root, SCHEMA.features[index]!, 30);
        await clickNext(root);
        expect(root.textContent).toContain(`Question ${index + 1} of 18`);
        expect(root.querySelector("#sleeping_hour-error")?.textContent)
            .toContain("between 0 and 24");
        expect(app.state.answers["sleeping_hour"]).toBeUndefined();
    });

    it("requires an answer before advancing", async () => {
        const { root } = await makeApp();
        await clickNext(root);  // age left empty
        expect(root.textContent).toContain("Question 1 of 18");
        expect(root.querySelector("#age-error")?.textContent).toContain("required");
    });

    it("offers a 'No' answer on the hangout step mapping to 0", async () => {
        const { root, client } = await makeApp();
        for (let i = 0; i < SCHEMA.features.length - 1; i++) {
            await answerStep(root, i, VALID_ANSWERS[SCHEMA.features[i]!.name]!);
        }
        const none = root.querySelector<HTMLInputElement>("#hangout_hours-no")!;
        expect(none).not.toBeNull();
        none.checked = true;
        none.dispatchEvent(new Event("change"));
        const input = root.querySelector<HTMLInputElement>("#hangout_hours")!;
        expect(input.disabled).toBe(true);
        expect(input.value).toBe("0");
        await clickNext(root);
        await waitFor(() => client.assessCalls.length === 1, "assessment call");
        expect(client.assessCalls[0]!["hangout_hours"]).toBe(0);
    });

    it("is resumable within a session", async () => {
        const { root } = await makeApp();
        for (let i = 0; i < 5; i++) {
            await answerStep(root, i, VALID_ANSWERS[SCHEMA.features[i]!.name]!);
        }
        // a fresh page load restores progress and entered answers
        const second = await makeApp();
        expect(second.root.textContent).toContain("Question 6 of 18");
        expect(second.app.state.answers["age"]).toBe(VALID_ANSWERS["age"]);
    });

    it("shows a retry screen when the schema fetch fails", async () => {
        const client = new MockClient();
        client.schemaFailures = 1;
        const { root } = await makeApp(client);
        expect(root.querySelector("#retry-screen")).not.toBeNull();
        root.querySelector<HTMLButtonElement>("#retry")!.click();
        await waitFor(() => root.querySelector("#wizard") !== null, "wizard after retry");
    });
});

describe("result and consent", () => {
    it("displays the service's label and disclaimer verbatim", async () => {
        const { root, client } = await makeApp();
        await completeWizard(root);
        expect(client.assessCalls.length).toBe(1);
        expect(root.querySelector("#result-label")?.textContent)
            .toBe(RESULT.label.name);
        expect(root.querySelector("#disclaimer")?.textContent)
            .toBe(RESULT.disclaimer);
        expect(window.location.hash).toBe("#/result");
    });

    it("never computes a label client-side", async () => {
        const client = new MockClient();
        client.result = { ...RESULT, label: { code: 3, name: "anxiety" } };
        const { root } = await makeApp(client);
        await completeWizard(root);
        expect(root.querySelector("#result-label")?.textContent).toBe("anxiety");
    });

    it("routes to the matching therapy page on agreement", async () => {
        const { root, client } = await makeApp();
        await completeWizard(root);
        root.querySelector<HTMLButtonElement>("#agree")!.click();
        await waitFor(() => root.querySelector("#therapy-items") !== null, "therapy list");
        expect(client.consentCalls).toEqual([{ id: RESULT.assessment_id, agreed: true }]);
        expect(window.location.hash).toBe(`#/vcbt/${RESULT.label.name}`);
        const titles = [...root.querySelectorAll(".item-title")].map(n => n.textContent);
        expect(titles).toEqual(CATALOGS[RESULT.label.name]!.items.map(i => i.title));
        const kinds = [...root.querySelectorAll(".item-kind")].map(n => n.textContent);
        expect(kinds).toEqual(CATALOGS[RESULT.label.name]!.items.map(i => ` [${i.kind}]`));
    });

    it("shows the exit screen and takes no route on disagreement", async () => {
        const { root, client } = await makeApp();
        await completeWizard(root);
        root.querySelector<HTMLButtonElement>("#disagree")!.click();
        await waitFor(() => root.querySelector("#exit-screen") !== null, "exit screen");
        expect(client.consentCalls).toEqual([{ id: RESULT.assessment_id, agreed: false }]);
        expect(client.catalogCalls).toEqual([]);
        expect(window.location.hash).toBe("#/exit");
    });

    it("shows the already-recorded state on a duplicate consent", async () => {
        const client = new MockClient();
        client.consentConflict = true;
        const { root } = await makeApp(client);
        await completeWizard(root);
        root.querySelector<HTMLButtonElement>("#agree")!.click();
        await waitFor(() => root.querySelector("#consent-recorded") !== null,
                      "already-recorded notice");
        expect(root.querySelector("#agree")).toBeNull();
    });

    it("guards the result route until a result exists", async () => {
        const { root } = await makeApp();
        window.location.hash = "#/result";
        await tick();
        expect(root.querySelector("#wizard")).not.toBeNull();
        expect(root.querySelector("#result")).toBeNull();
    });

    it("renders each disorder's full catalog on its page", async () => {
        const { root, app } = await makeApp();
        for (const [disorder, catalog] of Object.entries(CATALOGS)) {
            app.navigate(`#/vcbt/${disorder}`);
            await waitFor(
                () => root.querySelectorAll(".therapy-item").length === catalog.items.length,
                `${disorder} catalog`);
            const titles = [...root.querySelectorAll(".item-title")].map(n => n.textContent);
            expect(titles).toEqual(catalog.items.map(i => i.title));
        }
    });
});
