/**
 * Host-side statevector simulator.
 *
 * Amplitudes are split into Float64Array re/im planes; basis index bit q is
 * qubit q. All host-facing bitstrings are little-endian: the rightmost
 * character is position 0 (the first input qubit or classical bit 0), as in
 * mainstream quantum SDKs. The qcomb tool writes bitstrings the other way
 * around; conversion lives in convention.ts.
 */

export type GateName =
  | 'id' | 'x' | 'y' | 'z' | 'h' | 's' | 'sdg' | 't' | 'tdg'
  | 'rx' | 'ry' | 'rz'
  | 'cx' | 'cz' | 'swap' | 'ccx'

export type HostOp =
  | { name: GateName; qubits: number[]; angle?: number }
  | { name: 'measure'; qubits: number[]; clbit: number }

export interface HostCircuit {
  numQubits: number
  inputQubits: number[]
  ops: HostOp[]
}

export interface StateVector {
  numQubits: number
  re: Float64Array
  im: Float64Array
}

export const GATE_ARITY: Record<GateName, number> = {
  id: 1, x: 1, y: 1, z: 1, h: 1, s: 1, sdg: 1, t: 1, tdg: 1,
  rx: 1, ry: 1, rz: 1,
  cx: 2, cz: 2, swap: 2, ccx: 3,
}

export const ROTATION_GATES = new Set<GateName>(['rx', 'ry', 'rz'])

const MAX_QUBITS = 20

export function measurements(circuit: HostCircuit): { qubit: number; clbit: number }[] {
  const out: { qubit: number; clbit: number }[] = []
  for (const op of circuit.ops) {
    if (op.name === 'measure') out.push({ qubit: op.qubits[0], clbit: op.clbit })
  }
  return out
}

export function validateCircuit(circuit: HostCircuit): void {
  const { numQubits, inputQubits, ops } = circuit
  if (!Number.isInteger(numQubits) || numQubits < 1 || numQubits > MAX_QUBITS) {
    throw new Error(`numQubits must be in 1..${MAX_QUBITS}, got ${numQubits}`)
  }
  if (inputQubits.length === 0) throw new Error('circuit declares no input qubits')
  if (new Set(inputQubits).size !== inputQubits.length) {
    throw new Error('duplicate input qubit')
  }
  for (const q of inputQubits) assertQubit(q, numQubits, 'input')

  let seenMeasure = false
  const measuredQubits = new Set<number>()
  const usedClbits = new Set<number>()
  for (const op of ops) {
    if (op.name === 'measure') {
      seenMeasure = true
      const q = op.qubits[0]
      assertQubit(q, numQubits, 'measured')
      if (measuredQubits.has(q)) throw new Error(`qubit ${q} measured twice`)
      if (usedClbits.has(op.clbit)) throw new Error(`clbit ${op.clbit} written twice`)
      measuredQubits.add(q)
      usedClbits.add(op.clbit)
      continue
    }
    if (seenMeasure) {
      throw new Error(`mid-circuit measurement: gate ${op.name} after a measure`)
    }
    const arity = GATE_ARITY[op.name]
    if (arity === undefined) throw new Error(`unsupported gate ${String(op.name)}`)
    if (op.qubits.length !== arity) {
      throw new Error(`${op.name} expects ${arity} qubit(s), got ${op.qubits.length}`)
    }
    if (new Set(op.qubits).size !== op.qubits.length) {
      throw new Error(`duplicate qubit in ${op.name}`)
    }
    for (const q of op.qubits) assertQubit(q, numQubits, 'gate')
    const rotating = ROTATION_GATES.has(op.name)
    if (rotating && (typeof op.angle !== 'number' || !Number.isFinite(op.angle))) {
      throw new Error(`${op.name} requires a finite angle`)
    }
    if (!rotating && op.angle !== undefined) {
      throw new Error(`${op.name} takes no angle`)
    }
  }
  if (!seenMeasure) throw new Error('circuit has no measurements')
}

function assertQubit(q: number, numQubits: number, label: string): void {
  if (!Number.isInteger(q) || q < 0 || q >= numQubits) {
    throw new Error(`${label} qubit ${q} out of range for ${numQubits} qubit(s)`)
  }
}

/** Basis state with input qubits set per a little-endian assignment string. */
export function initialState(circuit: HostCircuit, inputBits: string): StateVector {
  const { numQubits, inputQubits } = circuit
  if (inputBits.length !== inputQubits.length) {
    throw new Error(
      `assignment ${inputBits} has length ${inputBits.length}, expected ${inputQubits.length}`,
    )
  }
  let index = 0
  for (let p = 0; p < inputQubits.length; p += 1) {
    const ch = inputBits[inputBits.length - 1 - p] // little-endian: position p from the right
    if (ch === '1') index |= 1 << inputQubits[p]
    else if (ch !== '0') throw new Error(`assignment must be over {0,1}, got ${inputBits}`)
  }
  const size = 1 << numQubits
  const state = { numQubits, re: new Float64Array(size), im: new Float64Array(size) }
  state.re[index] = 1
  return state
}

type Matrix2 = [number, number, number, number, number, number, number, number]

function singleQubitMatrix(name: GateName, angle: number | undefined): Matrix2 {
  const c = angle === undefined ? 0 : Math.cos(angle / 2)
  const s = angle === undefined ? 0 : Math.sin(angle / 2)
  const sq = Math.SQRT1_2
  switch (name) {
    // [m00re, m00im, m01re, m01im, m10re, m10im, m11re, m11im]
    case 'id': return [1, 0, 0, 0, 0, 0, 1, 0]
    case 'x': return [0, 0, 1, 0, 1, 0, 0, 0]
    case 'y': return [0, 0, 0, -1, 0, 1, 0, 0]
    case 'z': return [1, 0, 0, 0, 0, 0, -1, 0]
    case 'h': return [sq, 0, sq, 0, sq, 0, -sq, 0]
    case 's': return [1, 0, 0, 0, 0, 0, 0, 1]
    case 'sdg': return [1, 0, 0, 0, 0, 0, 0, -1]
    case 't': return [1, 0, 0, 0, 0, 0, sq, sq]
    case 'tdg': return [1, 0, 0, 0, 0, 0, sq, -sq]
    case 'rx': return [c, 0, 0, -s, 0, -s, c, 0]
    case 'ry': return [c, 0, -s, 0, s, 0, c, 0]
    case 'rz': return [c, -s, 0, 0, 0, 0, c, s]
    default:
      throw new Error(`${name} is not a single-qubit gate`)
  }
}

function applySingleQubit(state: StateVector, m: Matrix2, target: number): void {
  const { re, im } = state
  const mask = 1 << target
  const [a00r, a00i, a01r, a01i, a10r, a10i, a11r, a11i] = m
  for (let i = 0; i < re.length; i += 1) {
    if (i & mask) continue
    const j = i | mask
    const xr = re[i], xi = im[i], yr = re[j], yi = im[j]
    re[i] = a00r * xr - a00i * xi + a01r * yr - a01i * yi
    im[i] = a00r * xi + a00i * xr + a01r * yi + a01i * yr
    re[j] = a10r * xr - a10i * xi + a11r * yr - a11i * yi
    im[j] = a10r * xi + a10i * xr + a11r * yi + a11i * yr
  }
}

export function applyOp(state: StateVector, op: HostOp): void {
  if (op.name === 'measure') return // terminal; sampling reads the final state
  const { re, im } = state
  const q = op.qubits
  switch (op.name) {
    case 'cx': {
      const control = 1 << q[0]
      const target = 1 << q[1]
      for (let i = 0; i < re.length; i += 1) {
        if ((i & control) === 0 || (i & target) !== 0) continue
        const j = i | target
        const tr = re[i], ti = im[i]
        re[i] = re[j]; im[i] = im[j]
        re[j] = tr; im[j] = ti
      }
      return
    }
    case 'cz': {
      const both = (1 << q[0]) | (1 << q[1])
      for (let i = 0; i < re.length; i += 1) {
        if ((i & both) === both) { re[i] = -re[i]; im[i] = -im[i] }
      }
      return
    }
    case 'swap': {
      const maskA = 1 << q[0]
      const maskB = 1 << q[1]
      for (let i = 0; i < re.length; i += 1) {
        const hasA = (i & maskA) !== 0
        const hasB = (i & maskB) !== 0
        if (hasA === hasB) continue
        const j = i ^ maskA ^ maskB
        if (j < i) continue
        const tr = re[i], ti = im[i]
        re[i] = re[j]; im[i] = im[j]
        re[j] = tr; im[j] = ti
      }
      return
    }
    case 'ccx': {
      const controls = (1 << q[0]) | (1 << q[1])
      const target = 1 << q[2]
      for (let i = 0; i < re.length; i += 1) {
        if ((i & controls) !== controls || (i & target) !== 0) continue
        const j = i | target
        const tr = re[i], ti = im[i]
        re[i] = re[j]; im[i] = im[j]
        re[j] = tr; im[j] = ti
      }
      return
    }
    default:
      applySingleQubit(state, singleQubitMatrix(op.name, op.angle), op.qubits[0])
  }
}

export function finalState(circuit: HostCircuit, inputBits: string): StateVector {
  validateCircuit(circuit)
  const state = initialState(circuit, inputBits)
  for (const op of circuit.ops) applyOp(state, op)
  return state
}

/**
 * Exact output distribution: little-endian bitstring over classical bits
 * (rightmost character = clbit 0) -> probability. Entries below 1e-12 are
 * dropped.
 */
export function exactDistribution(
  circuit: HostCircuit,
  inputBits: string,
): Map<string, number> {
  const state = finalState(circuit, inputBits)
  const mm = measurements(circuit)
  const width = mm.length
  const sorted = [...mm].sort((a, b) => a.clbit - b.clbit)
  const accum = new Map<string, number>()
  for (let i = 0; i < state.re.length; i += 1) {
    const p = state.re[i] * state.re[i] + state.im[i] * state.im[i]
    if (p === 0) continue
    let key = ''
    for (const { qubit } of sorted) {
      key = (i & (1 << qubit) ? '1' : '0') + key // clbit 0 ends up rightmost
    }
    accum.set(key, (accum.get(key) ?? 0) + p)
  }
  const result = new Map<string, number>()
  for (const key of [...accum.keys()].sort()) {
    const p = accum.get(key)!
    if (p >= 1e-12) result.set(key, p)
  }
  if (width === 0) throw new Error('circuit has no measurements')
  return result
}

function mulberry32(seed: number) {
  let t = seed >>> 0
  return () => {
    t += 0x6d2b79f5
    let r = Math.imul(t ^ (t >>> 15), 1 | t)
    r ^= r + Math.imul(r ^ (r >>> 7), 61 | r)
    return ((r ^ (r >>> 14)) >>> 0) / 4294967296
  }
}

/** Fold a (possibly 64-bit) manifest seed into the 32-bit host RNG. */
export function foldSeed(seed: number): number {
  const low = seed >>> 0
  const high = Math.floor(seed / 4294967296) >>> 0
  return (low ^ high) >>> 0
}

/**
 * Histogram of seeded samples from the exact output distribution.
 * Deterministic for a fixed (circuit, input, shots, seed).
 */
export function sampleShots(
  circuit: HostCircuit,
  inputBits: string,
  shots: number,
  seed: number,
): Map<string, number> {
  if (!Number.isInteger(shots) || shots < 1) {
    throw new Error(`shots must be a positive integer, got ${shots}`)
  }
  const dist = exactDistribution(circuit, inputBits)
  const keys = [...dist.keys()] // already sorted
  const cdf = new Float64Array(keys.length)
  let total = 0
  for (let i = 0; i < keys.length; i += 1) {
    total += dist.get(keys[i])!
    cdf[i] = total
  }
  const rng = mulberry32(foldSeed(seed))
  const counts = new Map<string, number>()
  for (let s = 0; s < shots; s += 1) {
    const r = rng() * total
    let lo = 0
    let hi = cdf.length - 1
    while (lo < hi) {
      const mid = (lo + hi) >> 1
      if (r <= cdf[mid]) hi = mid
      else lo = mid + 1
    }
    counts.set(keys[lo], (counts.get(keys[lo]) ?? 0) + 1)
  }
  return counts
}
