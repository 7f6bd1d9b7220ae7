use std::collections::BTreeSet;

use indexmap::IndexMap;

use super::{
    block_values_binding, eventset_binding, region_values_binding, temporal_binding, Block,
    BlockIndex, ExpandedDirective, IrAction, IrDirective, IrTarget, RegionInfo, RegionTable, Span,
};
use crate::catalog::CounterId;
use crate::reader::{DirectiveKind, SourcePosition};

/// Finds the blocks of a validated, normalized directive list.
///
/// Active regions are tracked by name rather than on a strict stack, so an
/// overlapping stop (one that is not the most recent start) is handled the
/// same way as a nested one. A block closes when no region is active.
pub fn collect_blocks(expanded: &[ExpandedDirective]) -> Vec<Block> {
    let mut blocks = Vec::new();
    let mut active: IndexMap<&str, ()> = IndexMap::new();
    let mut union: BTreeSet<CounterId> = BTreeSet::new();
    let mut block_start = None;

    for d in expanded {
        let Some(name) = d.region_name.as_deref() else {
            continue;
        };
        match d.kind {
            DirectiveKind::Start => {
                if active.is_empty() {
                    block_start = Some(d.position);
                    union.clear();
                }
                active.insert(name, ());
                union.extend(d.counters.iter().copied());
            }
            DirectiveKind::Stop => {
                active.shift_remove(name);
                if active.is_empty() {
                    let ordinal = blocks.len();
                    blocks.push(Block {
                        ordinal,
                        span: Span {
                            start: block_start.take().expect("stop follows a start"),
                            stop: d.position,
                        },
                        counters: union.iter().copied().collect(),
                        eventset_binding: eventset_binding(ordinal),
                        values_binding: block_values_binding(ordinal),
                    });
                }
            }
            DirectiveKind::Init | DirectiveKind::Deinit => {}
        }
    }
    blocks
}

/// Builds the region table and lowers every directive to IR actions.
///
/// Lowering per directive:
/// - start, nothing active: `block-create`, `region-copy-start`, `block-start`
/// - start, something active: `block-accumulate`, `block-pause`,
///   `region-copy-start`, `block-resume`
/// - stop, others still active: `block-accumulate`, `block-pause`,
///   `region-compute-emit`, `region-bump-temporal`, `block-resume`
/// - stop, last active: `block-stop-destroy`, `region-compute-emit`,
///   `region-bump-temporal`
pub fn collect_regions(
    expanded: &[ExpandedDirective],
    blocks: &[Block],
) -> (RegionTable, Vec<IrDirective>) {
    let mut table = RegionTable::new();
    let mut ir = Vec::new();
    let mut active: IndexMap<&str, SourcePosition> = IndexMap::new();
    let mut block = 0usize;

    for d in expanded {
        let mut emit = |action, target: IrTarget| {
            ir.push(IrDirective {
                action,
                target,
                position: d.position,
            })
        };
        match d.kind {
            DirectiveKind::Init => emit(IrAction::LibInit, IrTarget::Library),
            DirectiveKind::Deinit => emit(IrAction::LibDeinit, IrTarget::Library),
            DirectiveKind::Start => {
                let name = d.region_name.as_deref().expect("start has a name");
                let region = IrTarget::Region(name.to_string());
                if active.is_empty() {
                    emit(IrAction::BlockCreate, IrTarget::Block(block));
                    emit(IrAction::RegionCopyStart, region);
                    emit(IrAction::BlockStart, IrTarget::Block(block));
                } else {
                    emit(IrAction::BlockAccumulate, IrTarget::Block(block));
                    emit(IrAction::BlockPause, IrTarget::Block(block));
                    emit(IrAction::RegionCopyStart, region);
                    emit(IrAction::BlockResume, IrTarget::Block(block));
                }
                active.insert(name, d.position);

                let owner = &blocks[block];
                let counters: Vec<CounterId> = d.counters.iter().copied().collect();
                let indices = counters
                    .iter()
                    .map(|c| {
                        owner
                            .counters
                            .binary_search(c)
                            .expect("block union holds every region counter")
                    })
                    .collect();
                table.insert(
                    name.to_string(),
                    RegionInfo {
                        name: name.to_string(),
                        span: Span {
                            start: d.position,
                            stop: d.position,
                        },
                        counters,
                        block_index: BlockIndex {
                            block_ordinal: block,
                            indices,
                        },
                        values_binding: region_values_binding(name),
                        temporal_binding: temporal_binding(name),
                    },
                );
            }
            DirectiveKind::Stop => {
                let name = d.region_name.as_deref().expect("stop has a name");
                let region = IrTarget::Region(name.to_string());
                active.shift_remove(name);
                if let Some(info) = table.get_mut(name) {
                    info.span.stop = d.position;
                }
                if active.is_empty() {
                    emit(IrAction::BlockStopDestroy, IrTarget::Block(block));
                    emit(IrAction::RegionComputeEmit, region.clone());
                    emit(IrAction::RegionBumpTemporal, region);
                    block += 1;
                } else {
                    emit(IrAction::BlockAccumulate, IrTarget::Block(block));
                    emit(IrAction::BlockPause, IrTarget::Block(block));
                    emit(IrAction::RegionComputeEmit, region.clone());
                    emit(IrAction::RegionBumpTemporal, region);
                    emit(IrAction::BlockResume, IrTarget::Block(block));
                }
            }
        }
    }
    (table, ir)
}
