import { spawnSync } from 'node:child_process'
import { mkdtempSync, rmSync, writeFileSync } from 'node:fs'
import { tmpdir } from 'node:os'
import { join } from 'node:path'

import { afterAll, describe, expect, it } from 'vitest'

import { exportCircuit, qcombBinary, type HostCircuit } from '../src/index.js'

const BELL: HostCircuit = {
  numQubits: 2,
  inputQubits: [0, 1],
  ops: [
    { name: 'h', qubits: [0] },
    { name: 'cx', qubits: [0, 1] },
    { name: 'measure', qubits: [0], clbit: 0 },
    { name: 'measure', qubits: [1], clbit: 1 },
  ],
}

const tempDirs: string[] = []
afterAll(() => {
  for (const dir of tempDirs) rmSync(dir, { recursive: true, force: true })
})

function writeRecord(qasmText: string, specJson: string): { circuit: string; spec: string } {
  const dir = mkdtempSync(join(tmpdir(), 'qcomb-export-'))
  tempDirs.push(dir)
  const circuit = join(dir, 'exported.qasm')
  const spec = join(dir, 'exported.spec.json')
  writeFileSync(circuit, qasmText)
  writeFileSync(spec, specJson)
  return { circuit, spec }
}

describe('exportCircuit', () => {
  it('produces files the harness accepts without diagnostics', () => {
    const record = exportCircuit(BELL)
    const paths = writeRecord(record.qasmText, record.specJson)
    const result = spawnSync(
      qcombBinary(),
      ['check-spec', '--spec', paths.spec, '--circuit', paths.circuit],
      { encoding: 'utf-8' },
    )
    expect(result.status, result.stderr).toBe(0)
    expect(result.stdout).toContain('consistent')
  })

  it('derives the expected Bell spec in tool convention', () => {
    const record = exportCircuit(BELL, ['00'])
    const spec = JSON.parse(record.specJson) as {
      inputs: Record<string, Record<string, number>>
    }
    expect(Object.keys(spec.inputs)).toEqual(['00'])
    expect(spec.inputs['00']['00']).toBeCloseTo(0.5, 12)
    expect(spec.inputs['00']['11']).toBeCloseTo(0.5, 12)
  })

  it('converts host little-endian to tool declared-order bitstrings', () => {
    // X on q0 only: host outputs '001' (q0 rightmost), tool outputs '100'.
    const circuit: HostCircuit = {
      numQubits: 3,
      inputQubits: [0, 1, 2],
      ops: [
        { name: 'x', qubits: [0] },
        { name: 'measure', qubits: [0], clbit: 0 },
        { name: 'measure', qubits: [1], clbit: 1 },
        { name: 'measure', qubits: [2], clbit: 2 },
      ],
    }
    const record = exportCircuit(circuit, ['000'])
    const spec = JSON.parse(record.specJson) as {
      inputs: Record<string, Record<string, number>>
    }
    expect(Object.keys(spec.inputs['000'])).toEqual(['100'])
    expect(record.endiannessNote).toMatch(/little-endian/)
  })

  it('keeps gate order and emits the inputs pragma', () => {
    const record = exportCircuit(BELL, ['00'])
    const lines = record.qasmText.split('\n')
    expect(lines).toContain('// qucat inputs: 0,1')
    const hIndex = lines.findIndex((l) => l.startsWith('h '))
    const cxIndex = lines.findIndex((l) => l.startsWith('cx '))
    expect(hIndex).toBeGreaterThan(-1)
    expect(cxIndex).toBeGreaterThan(hIndex)
  })

  it('exports a gate-free circuit as declarations only', () => {
    const circuit: HostCircuit = {
      numQubits: 1,
      inputQubits: [0],
      ops: [{ name: 'measure', qubits: [0], clbit: 0 }],
    }
    const record = exportCircuit(circuit, ['0', '1'])
    expect(record.qasmText).toContain('qreg q[1];')
    expect(record.qasmText).toContain('measure q[0] -> c[0];')
    const spec = JSON.parse(record.specJson) as {
      inputs: Record<string, Record<string, number>>
    }
    expect(spec.inputs['1']).toEqual({ '1': 1 })
  })

  it('rejects unsupported gates and mid-circuit measurement', () => {
    const unsupported = {
      numQubits: 1,
      inputQubits: [0],
      ops: [
        { name: 'u3', qubits: [0] },
        { name: 'measure', qubits: [0], clbit: 0 },
      ],
    } as unknown as HostCircuit
    expect(() => exportCircuit(unsupported)).toThrow(/unsupported gate/)

    const midCircuit: HostCircuit = {
      numQubits: 2,
      inputQubits: [0],
      ops: [
        { name: 'measure', qubits: [0], clbit: 0 },
        { name: 'h', qubits: [1] },
      ],
    }
    expect(() => exportCircuit(midCircuit)).toThrow(/mid-circuit/)
  })
})
