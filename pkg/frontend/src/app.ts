/** Single-page questionnaire wizard: assess -> result/consent -> vcbt|exit.
 *
 * The UI never computes a label; everything shown on the result and
 * therapy screens comes verbatim from the service responses. Routes are
 * hash-based (#/assess, #/result, #/vcbt/{disorder}, #/exit) so the built
 * bundle can be served by any static file server.
 */

import {
    AnswerRejection,
    ApiClient,
    ConsentConflict,
    type FeatureSpec,
    type QuestionnaireSchema,
} from "./api.js";
import { clearState, freshState, loadState, saveState, type WizardState } from "./state.js";
import { codeName, validateAnswer } from "./validate.js";

type ClientLike = Pick<ApiClient, "schema" | "assess" | "consent" | "catalog">;

function el<K extends keyof HTMLElementTagNameMap>(
    tag: K, attrs: Record<string, string> = {}, text?: string,
): HTMLElementTagNameMap[K] {
    const node = document.createElement(tag);
    for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
    if (text !== undefined) node.textContent = text;
    return node;
}

export class App {
    state: WizardState;
    schema: QuestionnaireSchema | null = null;
    busy = false;
    private renderedHash = "";
    private readonly onHashChange: () => void;

    constructor(private readonly root: HTMLElement,
                private readonly client: ClientLike) {
        this.state = loadState();
        // re-render only on real navigation (back/forward); navigate()
        // renders directly and the echoed hashchange must not wipe
        // transient DOM state like validation messages
        this.onHashChange = () => {
            if ((window.location.hash || "#/assess") !== this.renderedHash) {
                this.render();
            }
        };
        window.addEventListener("hashchange", this.onHashChange);
    }

    dispose(): void {
        window.removeEventListener("hashchange", this.onHashChange);
    }

    async start(): Promise<void> {
        try {
            this.schema = await this.client.schema();
        } catch {
            this.renderRetry();
            return;
        }
        if (!window.location.hash) window.location.hash = "#/assess";
        this.render();
    }

    navigate(hash: string): void {
        window.location.hash = hash;
        this.render();
    }

    private persist(): void {
        saveState(this.state);
    }

    // ------------------------------------------------------------- routing

    render(): void {
        if (!this.schema) return;
        const hash = window.location.hash || "#/assess";
        this.renderedHash = hash;
        const vcbt = hash.match(/^#\/vcbt\/([a-z_]+)$/);
        this.root.replaceChildren();
        if (vcbt) {
            void this.renderVcbt(vcbt[1]!);
        } else if (hash === "#/result" && this.state.result) {
            this.renderResult();
        } else if (hash === "#/exit") {
            this.renderExit();
        } else {
            // includes #/result reached without a result: fall back to the wizard
            this.renderWizard();
        }
    }

    private renderRetry(): void {
        this.root.replaceChildren();
        const panel = el("div", { class: "panel", id: "retry-screen" });
        panel.append(el("p", {}, "Could not load the questionnaire. Check that the service is running."));
        const retry = el("button", { id: "retry" }, "Retry");
        retry.addEventListener("click", () => void this.start());
        panel.append(retry);
        this.root.append(panel);
    }

    // -------------------------------------------------------------- wizard

    private renderWizard(): void {
        const features = this.schema!.features;
        const step = Math.min(this.state.step, features.length - 1);
        const spec = features[step]!;

        const panel = el("div", { class: "panel", id: "wizard" });
        panel.append(el("div", { class: "progress" },
                        `Question ${step + 1} of ${features.length}`));
        const field = el("div", { class: "field" });
        field.append(el("label", { for: spec.name, class: "prompt" }, spec.prompt || spec.name));
        field.append(this.buildControl(spec));
        const message = el("div", { class: "error", id: `${spec.name}-error` });
        field.append(message);
        panel.append(field);

        const nav = el("div", { class: "nav" });
        const back = el("button", { id: "back", type: "button" }, "Back");
        back.disabled = step === 0 || this.busy;
        back.addEventListener("click", () => {
            this.state.step = Math.max(0, step - 1);
            this.persist();
            this.render();
        });
        const isLast = step === features.length - 1;
        const next = el("button", { id: "next", type: "button" }, isLast ? "Submit" : "Next");
        next.disabled = this.busy;
        next.addEventListener("click", () => void this.advance(spec, isLast));
        nav.append(back, next);
        panel.append(nav);
        this.root.append(panel);
    }

    private buildControl(spec: FeatureSpec): HTMLElement {
        const wrap = el("div", { class: "control" });
        const saved = this.state.answers[spec.name];
        const codes = spec.codes ?? {};

        if (spec.kind === "binary") {
            // toggle between the two named categories (unchecked = smaller code)
            const entries = Object.entries(codes).sort((a, b) => a[1] - b[1]);
            const [offName, offCode] = entries[0] ?? ["no", 0];
            const [onName, onCode] = entries[1] ?? ["yes", 1];
            const toggle = el("input", { type: "checkbox", id: spec.name });
            toggle.checked = saved === onCode;
            if (saved === undefined) toggle.dataset["untouched"] = "1";
            toggle.addEventListener("change", () => { delete toggle.dataset["untouched"]; });
            const caption = el("span", { class: "toggle-caption" }, `${offName} / ${onName}`);
            caption.dataset["off"] = String(offCode);
            caption.dataset["on"] = String(onCode);
            wrap.append(toggle, caption);
            return wrap;
        }

        if (spec.kind === "categorical") {
            const select = el("select", { id: spec.name });
            select.append(el("option", { value: "" }, "Select…"));
            for (const [name, code] of Object.entries(codes).sort((a, b) => a[1] - b[1])) {
                select.append(el("option", { value: String(code) }, name));
            }
            if (saved !== undefined) select.value = String(saved);
            wrap.append(select);
            return wrap;
        }

        // ordinal / continuous: bounded number input
        const [lo, hi] = spec.bounds;
        const input = el("input", {
            type: "number", id: spec.name, min: String(lo), max: String(hi),
            step: spec.integer || spec.kind === "ordinal" ? "1" : "any",
        });
        if (saved !== undefined) input.value = String(saved);
        wrap.append(input);

        const noAlias = Object.entries(spec.aliases ?? {}).find(([name]) => name === "no");
        if (noAlias) {
            // quick answer: "No" maps onto the aliased numeric value (0)
            const none = el("input", { type: "checkbox", id: `${spec.name}-no` });
            none.checked = saved === noAlias[1];
            none.addEventListener("change", () => {
                input.disabled = none.checked;
                if (none.checked) input.value = String(noAlias[1]);
            });
            input.disabled = none.checked;
            const label = el("label", { for: `${spec.name}-no`, class: "no-alias" }, "No");
            wrap.append(none, label);
        }
        return wrap;
    }

    private readControl(spec: FeatureSpec): string | number | null {
        const control = this.root.querySelector<HTMLElement>(`#${spec.name}`);
        if (!control) return null;
        if (spec.kind === "binary") {
            const toggle = control as HTMLInputElement;
            if (toggle.dataset["untouched"] === "1") return null;
            const caption = this.root.querySelector<HTMLElement>(".toggle-caption");
            const on = Number(caption?.dataset["on"] ?? 1);
            const off = Number(caption?.dataset["off"] ?? 0);
            return toggle.checked ? on : off;
        }
        const value = (control as HTMLInputElement | HTMLSelectElement).value;
        return value === "" ? null : value;
    }

    private async advance(spec: FeatureSpec, isLast: boolean): Promise<void> {
        if (this.busy) return;
        const verdict = validateAnswer(spec, this.readControl(spec));
        const message = this.root.querySelector(`#${spec.name}-error`);
        if (!verdict.ok) {
            if (message) message.textContent = verdict.message;
            return;
        }
        this.state.answers[spec.name] = verdict.value;
        if (!isLast) {
            this.state.step += 1;
            this.persist();
            this.render();
            return;
        }
        this.persist();
        await this.submit();
    }

    private async submit(): Promise<void> {
        this.busy = true;
        this.render();
        try {
            const result = await this.client.assess(this.state.answers);
            this.busy = false;
            this.state.result = result;
            this.state.consent = null;
            this.persist();
            this.navigate("#/result");
        } catch (error) {
            this.busy = false;
            if (error instanceof AnswerRejection && error.errors.length > 0) {
                const first = error.errors[0]!;
                const index = this.schema!.features.findIndex(f => f.name === first.feature);
                if (index >= 0) this.state.step = index;
                this.persist();
                this.render();
                const box = this.root.querySelector(`#${first.feature}-error`);
                if (box) box.textContent = first.message;
            } else {
                this.renderFatal(String(error));
            }
        }
    }

    // ------------------------------------------------------ result/consent

    private renderResult(): void {
        const result = this.state.result!;
        const panel = el("div", { class: "panel", id: "result" });
        panel.append(el("h2", {}, "Screening result"));
        panel.append(el("p", { id: "result-label", class: "label-name" },
                        result.label.name));
        panel.append(el("p", { id: "result-code" }, `code ${result.label.code}`));
        panel.append(el("p", { id: "disclaimer", class: "disclaimer" }, result.disclaimer));

        if (this.state.consent === null) {
            panel.append(el("p", {}, "Do you agree with this result?"));
            const agree = el("button", { id: "agree", type: "button" }, "I agree");
            const disagree = el("button", { id: "disagree", type: "button" }, "I disagree");
            agree.disabled = disagree.disabled = this.busy;
            agree.addEventListener("click", () => void this.decide(true));
            disagree.addEventListener("click", () => void this.decide(false));
            panel.append(agree, disagree);
        } else {
            panel.append(el("p", { id: "consent-recorded" },
                            "Your consent decision has already been recorded."));
        }
        this.root.append(panel);
    }

    private async decide(agreed: boolean): Promise<void> {
        if (this.busy) return;
        const result = this.state.result!;
        this.busy = true;
        this.render();
        try {
            const outcome = await this.client.consent(result.assessment_id, agreed);
            this.busy = false;
            this.state.consent = agreed;
            this.persist();
            if (agreed && outcome.route) {
                this.navigate(`#/${outcome.route}`);
            } else {
                this.navigate("#/exit");
            }
        } catch (error) {
            this.busy = false;
            if (error instanceof ConsentConflict) {
                this.state.consent = agreed;
                this.persist();
                this.render();
            } else {
                this.renderFatal(String(error));
            }
        }
    }

    // --------------------------------------------------------------- vcbt

    private async renderVcbt(disorder: string): Promise<void> {
        const panel = el("div", { class: "panel", id: "vcbt" });
        this.root.append(panel);
        let catalog;
        try {
            catalog = await this.client.catalog(disorder);
        } catch (error) {
            panel.append(el("p", { class: "error" }, `No therapy content: ${String(error)}`));
            return;
        }
        panel.append(el("h2", {}, `Self-help program: ${catalog.disorder}`));
        const list = el("ol", { id: "therapy-items" });
        for (const item of catalog.items) {
            const entry = el("li", { class: "therapy-item" });
            entry.append(el("strong", { class: "item-title" }, item.title));
            entry.append(el("span", { class: "item-kind" }, ` [${item.kind}]`));
            entry.append(el("p", { class: "item-description" }, item.description));
            if (item.link) entry.append(el("a", { href: item.link }, "open"));
            list.append(entry);
        }
        panel.append(list);
        panel.append(this.restartLink());
    }

    private renderExit(): void {
        const panel = el("div", { class: "panel", id: "exit-screen" });
        panel.append(el("h2", {}, "Thank you"));
        panel.append(el("p", {},
            "Your decision was recorded. No self-help program was started. "
            + "If you are struggling, please reach out to a mental health professional."));
        panel.append(this.restartLink());
        this.root.append(panel);
    }

    private restartLink(): HTMLElement {
        const restart = el("button", { id: "restart", type: "button" }, "Start over");
        restart.addEventListener("click", () => {
            clearState();
            this.state = freshState();
            this.navigate("#/assess");
        });
        return restart;
    }

    private renderFatal(message: string): void {
        this.root.replaceChildren();
        const panel = el("div", { class: "panel", id: "fatal" });
        panel.append(el("p", { class: "error" }, message));
        panel.append(this.restartLink());
        this.root.append(panel);
    }
}
