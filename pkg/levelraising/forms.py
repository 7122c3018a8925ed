from __future__ import annotations

from flask_wtf import FlaskForm
from sympy import isprime
from wtforms import IntegerField, StringField
from wtforms.validators import InputRequired, Length, Optional, ValidationError

from .models import EigenData


class EigenRecordForm(FlaskForm):
    label = StringField("Label", validators=[Optional(), Length(max=120)])
    p = IntegerField("Prime p", validators=[InputRequired()])
    a1 = IntegerField("Eigenvalue of T_{p,1}", validators=[InputRequired()])
    a2 = IntegerField("Eigenvalue of T_{p,2}", validators=[InputRequired()])
    a0 = IntegerField("Eigenvalue of T_{p,0}", validators=[Optional()])

    def validate_p(self, field):  # pylint: disable=missing-docstring
        if field.data is not None and not isprime(field.data):
            raise ValidationError(f"p={field.data} is not prime.")

    def validate_a0(self, field):  # pylint: disable=missing-docstring
        if field.data is not None and field.data != 1:
            raise ValidationError("trivial central character required")

    def to_eigendata(self) -> EigenData:
        return EigenData(
            p=self.p.data,
            a1=self.a1.data,
            a2=self.a2.data,
            label=self.label.data or None,
        )
