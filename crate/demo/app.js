// Wiring for the static demo page: three operations (analyze, run a
// suite, search a claim), all synchronous wasm calls on JSON strings.

import init, { analyze, run_suite, search, catalog } from "./pkg/nestlab_wasm.js";

const $ = (id) => document.getElementById(id);

const PRESETS = {
  "separating nest": {
    kind: "nest",
    universe: ["a", "b", "c"],
    sets: [["a"], ["a", "b"]],
  },
  "nest pair": {
    kind: "nest_pair",
    universe: ["a", "b", "c"],
    left: [["a"], ["a", "b"]],
    right: [["c"], ["b", "c"]],
  },
  "vee relation": {
    kind: "relation",
    universe: ["a", "b", "c"],
    pairs: [["a", "b"], ["a", "c"]],
  },
  "non-nest family": {
    kind: "family",
    universe: ["a", "b", "c"],
    sets: [["a"], ["b"], ["a", "c"]],
  },
};

function show(element, text, isError = false) {
  element.textContent = text;
  element.classList.toggle("error", isError);
}

function run(button, output, operation) {
  button.disabled = true;
  try {
    show(output, operation());
  } catch (error) {
    show(output, String(error), true);
  } finally {
    button.disabled = false;
  }
}

function fillSelect(select, entries) {
  for (const entry of entries) {
    const option = document.createElement("option");
    option.value = entry.id;
    option.textContent = entry.id;
    select.append(option);
  }
}

function setupAnalyze() {
  const input = $("analyze-input");
  const presets = $("analyze-presets");
  for (const [name, instance] of Object.entries(PRESETS)) {
    const button = document.createElement("button");
    button.type = "button";
    button.textContent = name;
    button.addEventListener("click", () => {
      input.value = JSON.stringify(instance, null, 2);
    });
    presets.append(button);
  }
  input.value = JSON.stringify(PRESETS["separating nest"], null, 2);
  $("analyze-run").addEventListener("click", () =>
    run($("analyze-run"), $("analyze-out"), () => analyze(input.value)),
  );
}

function setupSuites(suites) {
  const select = $("suite-id");
  const maxN = $("suite-max-n");
  const summary = $("suite-summary");
  const sampledRadio = $("suite-sampled-radio");
  fillSelect(select, suites);

  const refresh = () => {
    const suite = suites.find((s) => s.id === select.value);
    const sampled = sampledRadio.checked && suite.supports_sampling;
    sampledRadio.disabled = !suite.supports_sampling;
    if (!suite.supports_sampling) {
      document.querySelector('input[name="mode"][value="exhaustive"]').checked = true;
    }
    maxN.max = sampled ? 6 : suite.exhaustive_cap;
    if (Number(maxN.value) > Number(maxN.max)) maxN.value = maxN.max;
    $("suite-samples-box").hidden = !sampled;
    $("suite-seed-box").hidden = !sampled;
    summary.textContent =
      `${suite.summary} (instances: ${suite.kind}; exhaustive cap: n = ${suite.exhaustive_cap}` +
      `${suite.supports_sampling ? ", sampling available" : ""})`;
  };
  select.addEventListener("change", refresh);
  $("suite-mode").addEventListener("change", refresh);
  refresh();

  $("suite-run").addEventListener("click", () =>
    run($("suite-run"), $("suite-out"), () => {
      const spec = { suite_id: select.value, max_n: Number(maxN.value) };
      if (sampledRadio.checked) {
        spec.mode = "sampled";
        spec.samples = Number($("suite-samples").value);
        spec.seed = Number($("suite-seed").value);
      } else {
        spec.mode = "exhaustive";
      }
      return run_suite(JSON.stringify(spec));
    }),
  );
}

function setupSearch(claims) {
  const select = $("search-claim");
  const maxN = $("search-max-n");
  const summary = $("search-summary");
  fillSelect(select, claims);

  const refresh = () => {
    const claim = claims.find((c) => c.id === select.value);
    maxN.max = claim.cap;
    if (Number(maxN.value) > Number(maxN.max)) maxN.value = maxN.max;
    summary.textContent = `${claim.summary} (scans ${claim.kind} instances up to n = ${claim.cap})`;
  };
  select.addEventListener("change", refresh);
  refresh();

  $("search-run").addEventListener("click", () =>
    run($("search-run"), $("search-out"), () => search(select.value, Number(maxN.value))),
  );
}

async function main() {
  await init();
  const { suites, claims } = JSON.parse(catalog());
  setupAnalyze();
  setupSuites(suites);
  setupSearch(claims);
}

main().catch((error) => {
  show($("analyze-out"), `failed to load the wasm module: ${error}`, true);
});
