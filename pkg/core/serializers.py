from rest_framework import serializers

from .exactq import as_rational, format_rational
from .exceptions import InvalidParameters
from .minimal_model import ModelParams
from .suites import SUITES


class RationalField(serializers.Field):
    """Exact rationals as ``num/den`` strings; ints are accepted on input."""

    default_error_messages = {
        'invalid': 'Enter an exact rational such as "7/4" or an integer.',
    }

    def to_internal_value(self, data):
        if isinstance(data, bool) or not isinstance(data, (int, str)):
            self.fail('invalid')
        try:
            return as_rational(data)
        except InvalidParameters:
            self.fail('invalid')

    def to_representation(self, value):
        return format_rational(value)


class QSeriesSerializer(serializers.Serializer):
    trunc = RationalField(allow_null=True)
    terms = serializers.SerializerMethodField()

    def get_terms(self, instance):
        return [[format_rational(exp), str(coeff)] for exp, coeff in instance.items()]


class RiggedPathSerializer(serializers.Serializer):
    """A rigged path as ``{"r": [r_L, ..., r_0], "sigma": [s_{L-1}, ..., s_0]}``."""

    r = serializers.ListField(child=serializers.IntegerField())
    sigma = serializers.ListField(child=serializers.IntegerField())


class BlockSerializer(serializers.Serializer):
    min = serializers.IntegerField()
    max = serializers.IntegerField()
    kind = serializers.SerializerMethodField()
    particles = serializers.IntegerField()

    def get_kind(self, instance):
        return instance.kind.value


class PathDegreeSerializer(serializers.Serializer):
    path = RiggedPathSerializer()
    degree = RationalField()


class EnumerationRowSerializer(serializers.Serializer):
    """Flat CSV row: comma separated heights and riggings."""

    r_seq = serializers.SerializerMethodField()
    sigma_seq = serializers.SerializerMethodField()
    degree = RationalField()

    def get_r_seq(self, instance):
        return ','.join(map(str, instance['path'].r))

    def get_sigma_seq(self, instance):
        return ','.join(map(str, instance['path'].sigma))


class VerdictSerializer(serializers.Serializer):
    label = serializers.CharField()
    ok = serializers.BooleanField()
    status = serializers.SerializerMethodField()
    first_diff = serializers.SerializerMethodField()
    detail = serializers.CharField()

    def get_status(self, instance):
        if instance.skipped:
            return 'SKIP'
        if instance.capped:
            return 'CAP'
        return 'PASS' if instance.ok else 'FAIL'

    def get_first_diff(self, instance):
        if instance.first_diff is None:
            return None
        exp, left, right = instance.first_diff
        return {'exponent': format_rational(exp), 'left': str(left), 'right': str(right)}


class OrbitStepSerializer(PathDegreeSerializer):
    """One step of a move trace; an undefined move has no path."""

    move = serializers.CharField(allow_null=True)
    undefined = serializers.BooleanField()
    particles = serializers.IntegerField(allow_null=True)
    rigging = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    blocks = BlockSerializer(many=True, allow_null=True)


class RunConfigSerializer(serializers.Serializer):
    """
    Validated parameters shared by the management commands.

    (p, pp) are checked together: both present, coprime and 3 <= p < pp.
    """

    FORMATS = ('text', 'json', 'csv')
    METHODS = ('bosonic', 'fermionic', 'paths', 'all')

    p = serializers.IntegerField(required=False, allow_null=True)
    pp = serializers.IntegerField(required=False, allow_null=True)
    r = serializers.IntegerField(required=False, allow_null=True, min_value=1)
    s = serializers.IntegerField(required=False, allow_null=True, min_value=1)
    L = serializers.IntegerField(required=False, allow_null=True, min_value=0)
    trunc = RationalField(required=False, allow_null=True)
    max_degree = RationalField(required=False, allow_null=True)
    method = serializers.ChoiceField(choices=METHODS, required=False, default='all')
    format = serializers.ChoiceField(choices=FORMATS, required=False, default='text')
    parallelism = serializers.IntegerField(required=False, allow_null=True, min_value=1)
    l_cap = serializers.IntegerField(required=False, allow_null=True, min_value=0)
    suite = serializers.ChoiceField(choices=SUITES, required=False, allow_null=True)
    l = serializers.IntegerField(required=False, allow_null=True, min_value=0)
    mu = serializers.IntegerField(required=False, allow_null=True)
    k = serializers.IntegerField(required=False, allow_null=True, min_value=1)

    def validate_trunc(self, value):
        if value is not None and value < 0:
            raise serializers.ValidationError('Truncation must be nonnegative.')
        return value

    def validate(self, attrs):
        p, pp = attrs.get('p'), attrs.get('pp')
        if (p is None) != (pp is None):
            raise serializers.ValidationError('--p and --pp must be given together.')
        if p is not None:
            try:
                attrs['params'] = ModelParams(p, pp)
            except InvalidParameters as exc:
                raise serializers.ValidationError({'p': str(exc)})
            r, s = attrs.get('r'), attrs.get('s')
            if r is not None and r > p - 1:
                raise serializers.ValidationError({'r': f'r must lie in 1..{p - 1}.'})
            if s is not None and s > pp - 1:
                raise serializers.ValidationError({'s': f's must lie in 1..{pp - 1}.'})
        return attrs
