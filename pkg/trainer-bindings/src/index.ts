/**
 * Training-loop bindings for the optforge engine.
 *
 * Everything goes through the engine's external interfaces: batch
 * generation and benchmark construction shell out to the CLI, and
 * completion scoring talks to one lazily-spawned instance of the
 * stateless scoring service (so a training loop is not paying a
 * process start per scored completion). Numerical results are the
 * CLI's own wire values, bit for bit.
 *
 * Runtime exports: generateBatch, scoreCompletion, buildBenchmark and
 * the engine VERSION string.
 */
import { execFileSync, spawn, ChildProcess } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

const PYTHON = process.env.OPTFORGE_PY ?? "python3";

/** Matches the engine's generator_version ("optforge-<semver>"). */
export const VERSION = "optforge-0.1.0";

/** One generated instance: prompt view plus its canonical record line. */
export interface PromptRecord {
  instanceId: string;
  prompt: string;
  task: string;
  difficulty: string;
  seed: number;
  /** Canonical instance line exactly as `optforge generate` wrote it. */
  recordLine: string;
}

/** Reward breakdown in the CLI/service wire shape (rationals as strings). */
export interface RewardRecord {
  instance_id: string;
  format_score: number;
  feasibility_component: string;
  optimality: string | null;
  total: string;
  feasible: boolean;
  objective: number | null;
}

export interface BenchmarkHandle {
  path: string;
  digest: string;
  count: number;
}

function runCli(args: string[]): string {
  return execFileSync(PYTHON, ["-m", "optforge", ...args], {
    encoding: "utf-8",
    maxBuffer: 256 * 1024 * 1024,
  });
}

function readLines(path: string): string[] {
  return readFileSync(path, "utf-8").split("\n").filter((l) => l.length > 0);
}

/**
 * Generate `count` instances of a task at a difficulty, seeded
 * `seed..seed+count-1`. The returned records carry the prompt view a
 * trainer feeds its model plus the canonical record line used for
 * scoring and checkpointing.
 */
export async function generateBatch(
  task: string,
  difficulty: string,
  count: number,
  seed: number,
): Promise<PromptRecord[]> {
  const dir = mkdtempSync(join(tmpdir(), "optforge-batch-"));
  try {
    const base = [
      "generate",
      "--task", task,
      "--difficulty", difficulty,
      "--count", String(count),
      "--seed", String(seed),
    ];
    const fullPath = join(dir, "full.jsonl");
    const promptPath = join(dir, "prompt.jsonl");
    runCli([...base, "--out", fullPath, "--view", "full"]);
    runCli([...base, "--out", promptPath, "--view", "prompt"]);
    const fullLines = readLines(fullPath);
    const promptLines = readLines(promptPath);
    return promptLines.map((line, i) => {
      const view = JSON.parse(line);
      return {
        instanceId: view.instance_id,
        prompt: view.prompt,
        task: view.task,
        difficulty: view.difficulty,
        seed: view.seed,
        recordLine: fullLines[i],
      };
    });
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

let service: Promise<{ child: ChildProcess; url: string }> | null = null;

function startService(): Promise<{ child: ChildProcess; url: string }> {
  return new Promise((resolve, reject) => {
    const child = spawn(PYTHON, ["-m", "optforge", "serve", "--port", "0"], {
      stdio: ["ignore", "pipe", "pipe"],
    });
    let banner = "";
    const onData = (chunk: Buffer) => {
      banner += chunk.toString();
      const match = banner.match(/http:\/\/[\d.]+:(\d+)/);
      if (match) {
        // release the pipes so the child cannot keep the event loop alive
        child.stdout?.destroy();
        child.stderr?.destroy();
        resolve({ child, url: match[0] });
      }
    };
    child.stdout?.on("data", onData);
    child.on("error", reject);
    child.on("exit", (code) => {
      reject(new Error(`scoring service exited early (code ${code})`));
    });
    child.unref();
  });
}

async function serviceUrl(): Promise<string> {
  if (service === null) {
    service = startService();
    process.on("exit", () => {
      service?.then(({ child }) => child.kill()).catch(() => undefined);
    });
  }
  return (await service).url;
}

/**
 * Score one completion against an instance record (a PromptRecord from
 * generateBatch or a canonical record line/object loaded from a
 * corpus). Mirrors `optforge score` exactly.
 */
export async function scoreCompletion(
  instanceRecord: PromptRecord | string | object,
  completionText: string,
): Promise<RewardRecord> {
  let record: object;
  if (typeof instanceRecord === "string") {
    record = JSON.parse(instanceRecord);
  } else if ("recordLine" in (instanceRecord as PromptRecord)) {
    record = JSON.parse((instanceRecord as PromptRecord).recordLine);
  } else {
    record = instanceRecord;
  }
  const url = await serviceUrl();
  const response = await fetch(`${url}/score`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ instance: record, completion: completionText }),
  });
  const body = await response.json();
  if (!response.ok) {
    throw new Error(`scoring failed (${response.status}): ${body.error}`);
  }
  return body as RewardRecord;
}

/**
 * Build the fixed 1,000-instance benchmark corpus (100 per task at the
 * benchmark tier) into `outPath` and return its handle.
 */
export async function buildBenchmark(
  seed: number,
  outPath?: string,
): Promise<BenchmarkHandle> {
  const path =
    outPath ?? join(mkdtempSync(join(tmpdir(), "optforge-bench-")),
                    "benchmark.jsonl");
  const stdout = runCli([
    "bench", "--build-corpus", path, "--seed", String(seed),
  ]);
  const digest = stdout.match(/digest ([0-9a-f]{64})/)?.[1];
  if (!digest) {
    throw new Error("benchmark build did not report a digest");
  }
  return { path, digest, count: readLines(path).length };
}
