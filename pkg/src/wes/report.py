from dataclasses import asdict, dataclass

from src.homalg.ext import ext_group, extension_group_from_class
from src.wes.model import WesData, validate


@dataclass(frozen=True)
class WesReport:
    """The invariants of one WesData, in plain values so that it survives a trip through JSON"""
    gamma5: dict
    gamma5_blocks: list
    coker_b6: dict
    ext: dict
    pi5_class: list
    pi5_class_ext: list
    pi5: dict
    pi5_order: int | None
    isomorphisms: list
    valid: bool

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> 'WesReport':
        return cls(**data)

    def __str__(self) -> str:
        order = 'infinite' if self.pi5_order is None else self.pi5_order
        lines = [
            f'Gamma5          = {_format(self.gamma5)}   (blocks {self.gamma5_blocks})',
            f'coker b6        = {_format(self.coker_b6)}',
            f'Ext(H5, coker)  = {_format(self.ext)}',
            f'[pi5]           = {self.pi5_class}   (in Ext coordinates {self.pi5_class_ext})',
            f'pi5             = {_format(self.pi5)}   (order {order})',
        ]
        lines += self.isomorphisms
        if not self.valid:
            lines.append('warning: the data fails validation')
        return '\n'.join(lines)


def _format(group: dict) -> str:
    parts = [f'Z_{d}' for d in group['torsion']]
    if group['rank'] == 1:
        parts.append('Z')
    elif group['rank'] > 1:
        parts.append(f'Z^{group["rank"]}')
    return ' + '.join(parts) if parts else '0'


def wes_report(w: WesData) -> WesReport:
    """
    Gamma5, coker b6, Ext(H5, coker b6) with the class of pi5, and pi5 itself as the middle group of
    coker b6 >-> pi5 ->> H5
    :param w: WesData
    :return: WesReport
    """
    coker = w.coker_b6
    pi5, _, _ = extension_group_from_class(w.pi5_class)
    order = coker.order * w.H5.order if coker.is_finite and w.H5.is_finite else None
    return WesReport(
        gamma5=w.gamma5.group.to_dict(),
        gamma5_blocks=list(w.gamma5.block_moduli),
        coker_b6=coker.to_dict(),
        ext=ext_group(w.H5, coker).to_dict(),
        pi5_class=w.pi5_class.to_lists(),
        pi5_class_ext=list(w.pi5_class.ext_coordinates().coords),
        pi5=pi5.to_dict(),
        pi5_order=order,
        isomorphisms=[f'pi3 ≅ H3 = {w.H3}', f'pi4 ≅ H4 = {w.H4}'],
        valid=validate(w).passed,
    )
