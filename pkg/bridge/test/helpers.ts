import { readFileSync } from 'node:fs'
import { join } from 'node:path'
import { fileURLToPath } from 'node:url'

/** Shipped example programs of the primary package, consumed as files. */
export const CORPUS_DIR = fileURLToPath(
  new URL('../../src/qcomb/corpus', import.meta.url),
)

export const BRIDGE_ROOT = fileURLToPath(new URL('..', import.meta.url))

export function readCorpus(name: string): string {
  return readFileSync(join(CORPUS_DIR, `${name}.qasm`), 'utf-8')
}
