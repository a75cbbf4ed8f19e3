export {
  GATE_ARITY,
  ROTATION_GATES,
  applyOp,
  exactDistribution,
  finalState,
  foldSeed,
  initialState,
  measurements,
  sampleShots,
  validateCircuit,
  type GateName,
  type HostCircuit,
  type HostOp,
  type StateVector,
} from './sim.js'
export {
  ENDIANNESS_NOTE,
  emitToolQasm,
  hostToToolBits,
  parseToolQasm,
  toolToHostBits,
} from './convention.js'
export { chiSquarePValue, logGamma, regularizedGammaQ } from './chi-square.js'
export {
  SHOTS_PER_OUTPUT,
  assess,
  checkUof,
  chiSquareStatistic,
  distributionFor,
  shotsForInput,
  specFromJson,
  type Spec,
  type Verdict,
  type VerdictKind,
} from './oracle.js'
export { allInputAssignments, exportCircuit, type ExportRecord } from './export.js'
export {
  crossValidate,
  qcombBinary,
  runQcomb,
  totalVariationDistance,
  type CrossValidationReport,
} from './cross-validate.js'
export {
  loadManifest,
  renderUnitTests,
  replayCase,
  sha256,
  type RenderOptions,
  type ReplayCase,
  type ReplayManifest,
} from './replay.js'
